#include "newton/eea.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace newton {

namespace {

void require_pair(Int p, Int q) {
    if (p < 2)
        throw DomainError("first entry must exceed 1");
    if (q <= p)
        throw DomainError("second entry must exceed the first");
    if (std::gcd(p, q) != 1)
        throw DomainError("entries must be coprime");
}

} // namespace

EeaTable::EeaTable(Int p, Int q, std::vector<EeaRow> rows)
    : p_(p), q_(q), rows_(std::move(rows)), sign_(0) {
    validate();
    sign_ = checked_sub(checked_mul(rows_[0].b, p_), checked_mul(rows_[0].a, q_));
}

void EeaTable::validate() const {
    require_pair(p_, q_);
    if (rows_.size() < 2)
        throw DomainError("table needs at least two rows");
    Int k0 = static_cast<Int>(rows_.size()) - 2;

    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const EeaRow &r = rows_[i];
        if (r.a < 0 || r.b < 1)
            throw DomainError("table entries out of range");
        bool last = i + 1 == rows_.size();
        if (last != !r.n.has_value())
            throw DomainError("exactly the terminal row has no multiplier");
        if (!last && *r.n < 1)
            throw DomainError("multipliers must be positive");
    }

    // row recurrence, with the header acting as row 0
    Int pa = p_, pb = q_;
    for (std::size_t i = 0; i + 1 < rows_.size(); ++i) {
        Int na = checked_add(checked_mul(*rows_[i].n, rows_[i].a), rows_[i + 1].a);
        Int nb = checked_add(checked_mul(*rows_[i].n, rows_[i].b), rows_[i + 1].b);
        if (na != pa || nb != pb)
            throw DomainError("row recurrence failed at row " + std::to_string(i + 1));
        pa = rows_[i].a;
        pb = rows_[i].b;
    }

    // alternating unit determinants between consecutive rows
    pa = p_;
    pb = q_;
    for (Int k = 0; k <= k0; ++k) {
        const EeaRow &r = rows_[static_cast<std::size_t>(k)];
        Int det = checked_sub(checked_mul(pa, r.b), checked_mul(pb, r.a));
        Int want = ((k0 - k + 1) % 2 == 0) ? 1 : -1;
        if (det != want)
            throw DomainError("determinant failed at row " + std::to_string(k));
        pa = r.a;
        pb = r.b;
    }

    for (Int k = 1; k <= k0; ++k) {
        const EeaRow &r = rows_[static_cast<std::size_t>(k - 1)];
        if (!(r.b > r.a && r.a >= 1))
            throw DomainError("interior rows need b > a >= 1");
    }

    const EeaRow &pen = rows_[rows_.size() - 2];
    const EeaRow &end = rows_.back();
    Int a_k0 = (k0 == 0) ? p_ : rows_[static_cast<std::size_t>(k0 - 1)].a;
    if (pen.a != 1 || pen.b != q_ / p_ || *pen.n != a_k0)
        throw DomainError("next-to-last row must be (1, q/p, a_k0)");
    if (end.a != 0 || end.b != 1)
        throw DomainError("terminal row must be (0, 1)");
}

EeaTable EeaTable::compute(Int p, Int q) {
    require_pair(p, q);
    std::vector<Int> quots;
    Int x = q, y = p;
    while (y != 0) {
        quots.push_back(x / y);
        Int rem = x % y;
        x = y;
        y = rem;
    }
    // coprime with p >= 2 gives at least two quotients

    std::vector<EeaRow> rows;
    rows.push_back({0, 1, std::nullopt});
    rows.push_back({1, quots[0], quots[1]});
    for (std::size_t t = 2; t < quots.size(); ++t) {
        const EeaRow &cur = rows.back();
        const EeaRow &below = rows[rows.size() - 2];
        Int na = checked_add(checked_mul(*cur.n, cur.a), below.a);
        Int nb = checked_add(checked_mul(*cur.n, cur.b), below.b);
        rows.push_back({na, nb, quots[t]});
    }
    std::reverse(rows.begin(), rows.end());
    return EeaTable(p, q, std::move(rows));
}

EeaTable EeaTable::from_rows(Int p, Int q, std::vector<EeaRow> rows) {
    return EeaTable(p, q, std::move(rows));
}

EeaTable eea_table(Int p, Int q) { return EeaTable::compute(p, q); }

Int sign_pq(Int p, Int q) { return EeaTable::compute(p, q).sign(); }

EeaClass short_eea_classify(Int p, Int q) {
    return EeaLine::of(p, q).classify();
}

EeaLine EeaLine::of(Int p, Int q) { return EeaLine(EeaTable::compute(p, q)); }

EeaLine EeaLine::from_table(EeaTable table) { return EeaLine(std::move(table)); }

const EeaRow &EeaLine::row(std::size_t i) const {
    if (i >= table_.rows().size())
        throw DomainError("table has no row " + std::to_string(i + 1));
    return table_.rows()[i];
}

Int EeaLine::mult(std::size_t i) const {
    const EeaRow &r = row(i);
    if (!r.n)
        throw DomainError("terminal row has no multiplier");
    return *r.n;
}

EeaClass EeaLine::classify() const {
    if (rows_count() == 2)
        return EeaClass::VeryShort;
    if (rows_count() == 3)
        return a() == 1 ? EeaClass::ShortA1 : EeaClass::Short;
    return EeaClass::Long;
}

EeaLine shift_line(const EeaLine &line) {
    if (line.n() != 1)
        throw DomainError("only a head with multiplier 1 can be shifted");
    if (line.rows_count() < 3)
        throw DomainError("shift needs a row below the head");
    std::vector<EeaRow> rows(line.table().rows().begin() + 1, line.table().rows().end());
    rows[0].n = checked_add(*rows[0].n, 1);
    return EeaLine::from_table(EeaTable::from_rows(line.p(), line.q(), std::move(rows)));
}

EeaTable peeled_table(const EeaLine &line, Int j, Int l) {
    if (l < 1)
        throw DomainError("multiplier must be positive");
    if (!line.has_n1())
        throw DomainError("line too short to peel");
    if (j < 0 || j >= line.n1())
        throw DomainError("peel count out of range");
    Int ha = checked_sub(line.a(), checked_mul(j, line.a1()));
    Int hb = checked_sub(line.b(), checked_mul(j, line.b1()));
    Int np = checked_add(checked_mul(l, ha), line.a1());
    Int nq = checked_add(checked_mul(l, hb), line.b1());
    std::vector<EeaRow> rows;
    rows.push_back({ha, hb, l});
    rows.push_back({line.a1(), line.b1(), checked_sub(line.n1(), j)});
    rows.insert(rows.end(), line.table().rows().begin() + 2, line.table().rows().end());
    return EeaTable::from_rows(np, nq, std::move(rows));
}

EeaTable extended_table(const EeaLine &line, Int N) {
    if (N < 1)
        throw DomainError("multiplier must be positive");
    if (line.rows_count() < 4)
        throw DomainError("line ends too soon to extend"); // a'' = 0
    Int np = checked_add(checked_mul(N, line.a1()), line.a2());
    Int nq = checked_add(checked_mul(N, line.b1()), line.b2());
    std::vector<EeaRow> rows;
    rows.push_back({line.a1(), line.b1(), N});
    rows.insert(rows.end(), line.table().rows().begin() + 2, line.table().rows().end());
    return EeaTable::from_rows(np, nq, std::move(rows));
}

} // namespace newton
