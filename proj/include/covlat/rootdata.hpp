#pragma once

#include "covlat/intlat.hpp"

#include <utility>

namespace covlat {

enum class Family { SL, GL, Sp, GSpI, GSpII, SO3, SpinOdd, GSpinOdd, Custom };

std::string family_name(Family f);

/// Split root datum with a chosen set of simple (co)roots inside a fixed
/// ambient Y = Z^rank; X lives in the dual coordinates.
struct RootDatum {
    int rank = 0;
    std::vector<Vec> simple_coroots;  // vectors in Y
    std::vector<Vec> simple_roots;    // vectors in X (dual coordinates)
    Family family = Family::Custom;
    int family_rank = 0;

    int nsimple() const { return int(simple_coroots.size()); }

    // <alpha_j, alpha_i^vee> indexed (j, i)
    IntMat cartan_matrix() const;

    Vec reflect_cochar(int i, const Vec& y) const;  // w_{alpha_i} on Y
    Vec reflect_char(int i, const Vec& x) const;    // w_{alpha_i} on X
    QVec reflect_cochar_q(int i, const QVec& y) const;
    IntMat reflection_matrix(int i) const;  // on Y, acting by x -> x * M

    // all (root, coroot) pairs with the root a nonnegative combination of the
    // simple roots; deterministic order
    std::vector<std::pair<Vec, Vec>> positive_pairs() const;
    std::vector<std::pair<Vec, Vec>> all_pairs() const;

    QVec rho() const;  // half sum of positive coroots

    LatticeBasis coroot_span() const;      // Y^sc inside Y
    LatticeBasis root_span() const;        // X^sc inside X
    LatticeBasis derived_cochar() const;   // Y_0 = Y ∩ QΦ^vee
    bool center_connected() const;         // X/X^sc torsion free
    LatticeBasis center_cochar() const;    // Y_c; requires connected center

    void validate() const;
};

struct WeylElement {
    IntMat matrix;          // action on Y, row vector convention y -> y * matrix
    std::vector<int> word;  // reduced word in simple reflections
    int length = 0;
    int sign = 1;

    Vec apply(const Vec& y) const { return matrix.mul_vec_left(y); }
};

// Full enumeration with reduced words, deterministic order (by length, then
// discovery). Throws when the group exceeds cap.
std::vector<WeylElement> weyl_group(const RootDatum& d, const Int& cap = Int(1000000));

RootDatum standard_datum(Family f, int r);

struct LeviDatum {
    RootDatum parent;
    std::vector<int> subset;  // indices into the parent's simple roots
    RootDatum datum;          // induced datum on the same ambient Y
};

LeviDatum levi(const RootDatum& d, const std::vector<int>& subset);

// Annihilator of the Levi's simple roots in Y: the cocharacter lattice of the
// Levi's center.
LatticeBasis levi_center_cochar(const RootDatum& d, const std::vector<int>& subset);

// Z-dual P(L) of a full-root-rank L ⊆ Q-span(Δ) ⊆ X, written in
// fundamental-coweight coordinates (rank = number of simple roots).
LatticeBasis coweight_dual(const RootDatum& d, const QLattice& l_in_x);

// Rational coordinates of an X-vector in the simple-root basis; nullopt when
// the vector is outside the root span.
std::optional<QVec> root_coordinates(const RootDatum& d, const QVec& x);

}  // namespace covlat
