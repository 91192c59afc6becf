#pragma once

#include <optional>
#include <vector>

#include "newton/arith.hpp"

namespace newton {

struct EeaRow {
    Int a;
    Int b;
    std::optional<Int> n; // absent on the terminal (0,1) row
    bool operator==(const EeaRow &) const = default;
};

// Reversed unsigned extended-Euclid table for a coprime pair q > p > 1.
// rows()[k-1] holds row k; the header (p,q) plays the part of row 0.
// Invariants (all enforced on construction):
//   row recurrence  a_{k-1} = n_k a_k + a_{k+1}  (same for b), k = 1..k0+1
//   determinants    a_k b_{k+1} - b_k a_{k+1} = (-1)^{k0-k+1}, k = 0..k0
//   b_k > a_k >= 1 for k <= k0;  tail rows (1, q/p, a_{k0}) and (0, 1)
class EeaTable {
  public:
    static EeaTable compute(Int p, Int q);
    static EeaTable from_rows(Int p, Int q, std::vector<EeaRow> rows);

    Int p() const { return p_; }
    Int q() const { return q_; }
    const std::vector<EeaRow> &rows() const { return rows_; }
    Int k0() const { return static_cast<Int>(rows_.size()) - 2; }
    Int sign() const { return sign_; } // b1*p - a1*q = (-1)^(k0+1)
    bool operator==(const EeaTable &) const = default;

  private:
    EeaTable(Int p, Int q, std::vector<EeaRow> rows);
    void validate() const;
    Int p_;
    Int q_;
    std::vector<EeaRow> rows_;
    Int sign_;
};

EeaTable eea_table(Int p, Int q);
Int sign_pq(Int p, Int q);

enum class EeaClass {
    VeryShort, // a' = 0, i.e. q = mp+1 (covers every p = 2)
    ShortA1,   // a'' = 0 and a = 1, i.e. q = mp+p-1 with p > 2
    Short,     // a'' = 0 and a != 1
    Long,
};

EeaClass short_eea_classify(Int p, Int q);

// View of a table through its top rows: header (p,q), head row (a,b,n),
// then (a1,b1,n1) and (a2,b2,n2) where present.
class EeaLine {
  public:
    static EeaLine of(Int p, Int q);
    static EeaLine from_table(EeaTable table);

    const EeaTable &table() const { return table_; }
    Int p() const { return table_.p(); }
    Int q() const { return table_.q(); }
    Int sign() const { return table_.sign(); }
    Int rows_count() const { return static_cast<Int>(table_.rows().size()); }

    Int a() const { return row(0).a; }
    Int b() const { return row(0).b; }
    Int n() const { return mult(0); }
    Int a1() const { return row(1).a; }
    Int b1() const { return row(1).b; }
    bool has_n1() const { return rows_count() >= 3; }
    Int n1() const { return mult(1); }
    Int a2() const { return row(2).a; }
    Int b2() const { return row(2).b; }
    bool has_n2() const { return rows_count() >= 4; }
    Int n2() const { return mult(2); }

    Int m() const { return q() / p(); }
    Int r() const { return q() % p(); }
    EeaClass classify() const;

    bool operator==(const EeaLine &) const = default;

  private:
    explicit EeaLine(EeaTable table) : table_(std::move(table)) {}
    const EeaRow &row(std::size_t i) const;
    Int mult(std::size_t i) const;
    EeaTable table_;
};

// Rewrites a line whose head multiplier is 1: the head (a,b,1) is dropped
// and the next row's multiplier grows by one.  The sign flips.
EeaLine shift_line(const EeaLine &line);

// Table of (l(a-ja') + a', l(b-jb') + b') for 0 <= j < n', l >= 1:
// head rows (a-ja', b-jb', l), (a', b', n'-j), then the original tail.
EeaTable peeled_table(const EeaLine &line, Int j, Int l);

// Table of (Na' + a'', Nb' + b'') for N >= 1 (needs a'' != 0):
// head rows (a', b', N), (a'', b'', n''), then the original tail.
EeaTable extended_table(const EeaLine &line, Int N);

} // namespace newton
