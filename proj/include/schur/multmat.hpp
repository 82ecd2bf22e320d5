#ifndef SCHUR_MULTMAT_HPP
#define SCHUR_MULTMAT_HPP

#include <string>
#include <vector>

#include "schur/pelement.hpp"
#include "schur/presentation.hpp"

namespace schur {

// Basis of the relation module: t_{ij} for i < j in lexicographic order,
// followed by s_1..s_n; t_{ii} = 0 and t_{ji} = -t_{ij}.
class BasisIndex {
  public:
    explicit BasisIndex(int n);

    int n() const { return n_; }
    int size() const { return n_ * (n_ + 1) / 2; }

    struct TRef {
        int index; // -1 means the zero vector (t_{ii})
        int sign;
    };
    TRef t(int i, int j) const;
    int s(int i) const;
    std::string label(int index) const;

  private:
    int n_;
};

struct RelationRow {
    std::string label;
    std::vector<PElement> entries;
    bool is_zero() const;
};

// Mat(A): rows u_i (i = 1..n), v_{ij} (ordered pairs i != j), w_{ijh}
// (i < j < h) over the basis of V_n.
struct RelationMatrix {
    BasisIndex basis;
    std::vector<RelationRow> rows;
    // Set when a consistency relation of a concrete presentation left a
    // nonzero generator part after collection (the input is not a Lie
    // p-ring; the offending residue cannot be expressed in the basis).
    bool residual = false;
    // Nonempty when a symbolic family has a consistency relation whose
    // generator part is not identically zero: carries would depend on the
    // parameter values, so no single matrix describes the family.
    std::string symbolic_defect;

    int ncols() const { return basis.size(); }
    int nrows() const { return static_cast<int>(rows.size()); }
};

RelationMatrix build_matrix(const Presentation& P);

// Lowers a concrete relation matrix to integers by evaluating p at the prime.
std::vector<std::vector<mpz_class>> lower_concrete(const RelationMatrix& M, long prime);

} // namespace schur

#endif
