#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "xprod/linalg.hpp"
#include "xprod/poly.hpp"
#include "xprod/scalar.hpp"
#include "xprod/word.hpp"

namespace xprod {

/// Generator-level twist: the table of coefficients t[i,j,k,l] in
///
///     tau(b_i (x) a_j) = sum_{k,l} t[i,j,k,l] a_k (x) b_l
///
/// with i,l ranging over the B alphabet and j,k over the A alphabet.
/// Absent entries are zero. This one linear map determines the whole
/// homogeneous cross on the free algebras.
class TwistMatrix {
public:
    TwistMatrix(int dim_a, int dim_b) : dim_a_(dim_a), dim_b_(dim_b) {
        if (dim_a < 1 || dim_b < 1)
            throw std::invalid_argument("TwistMatrix: dimensions must be positive");
    }

    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }

    void set(int i, int j, int k, int l, Scalar v) {
        check_indices(i, j, k, l);
        if (v.is_zero())
            coeffs_.erase({i, j, k, l});
        else
            coeffs_[{i, j, k, l}] = std::move(v);
    }

    Scalar at(int i, int j, int k, int l) const {
        check_indices(i, j, k, l);
        auto it = coeffs_.find({i, j, k, l});
        return it == coeffs_.end() ? Scalar::zero() : it->second;
    }

    const std::map<std::array<int, 4>, Scalar>& entries() const { return coeffs_; }

    /// tau(b_i (x) a_j) as a polynomial in words a_k b_l.
    NCPoly apply(int i, int j) const {
        NCPoly out;
        for (const auto& [key, v] : coeffs_)
            if (key[0] == i && key[1] == j)
                out.add_term(Word{a_letter(key[2]), b_letter(key[3])}, v);
        return out;
    }

    /// Star-compatibility of the generator twist: conj(t[i,j,k,l]) == t[j,i,l,k].
    /// Requires a square alphabet (the Wick setting identifies B with A*).
    bool hermitian() const {
        if (dim_a_ != dim_b_) return false;
        // every stored entry must mirror correctly; a nonzero entry whose
        // mirror is absent fails when the loop reaches it
        for (const auto& [key, v] : coeffs_)
            if (v.conj() != at(key[1], key[0], key[3], key[2])) return false;
        return true;
    }

    /// tau(b_i (x) a_j) = a_j (x) b_i — the plain tensor flip.
    static TwistMatrix switch_twist(int dim_a, int dim_b) {
        return scaled_switch(dim_a, dim_b, Scalar::one());
    }

    /// t * flip. t = -1 gives the sign twist of degree-1 generators (its
    /// extension carries (-1)^{kl} across bidegrees); t = q gives the q-cross.
    static TwistMatrix scaled_switch(int dim_a, int dim_b, const Scalar& t) {
        TwistMatrix m(dim_a, dim_b);
        for (int i = 1; i <= dim_b; ++i)
            for (int j = 1; j <= dim_a; ++j) m.set(i, j, j, i, t);
        return m;
    }

    /// Color cross: tau(b_i (x) a_j) = t[i][j] a_j (x) b_i with an n x m
    /// coefficient table (rows over B, columns over A).
    static TwistMatrix color(const Mat& t) {
        TwistMatrix m(static_cast<int>(t.cols()), static_cast<int>(t.rows()));
        for (int i = 1; i <= m.dim_b_; ++i)
            for (int j = 1; j <= m.dim_a_; ++j) m.set(i, j, j, i, t.at(i - 1, j - 1));
        return m;
    }

    friend bool operator==(const TwistMatrix&, const TwistMatrix&) = default;

private:
    void check_indices(int i, int j, int k, int l) const {
        if (i < 1 || i > dim_b_ || l < 1 || l > dim_b_)
            throw std::out_of_range("TwistMatrix: B index out of range: (" + std::to_string(i) +
                                    "," + std::to_string(j) + "," + std::to_string(k) + "," +
                                    std::to_string(l) + ")");
        if (j < 1 || j > dim_a_ || k < 1 || k > dim_a_)
            throw std::out_of_range("TwistMatrix: A index out of range: (" + std::to_string(i) +
                                    "," + std::to_string(j) + "," + std::to_string(k) + "," +
                                    std::to_string(l) + ")");
    }

    int dim_a_;
    int dim_b_;
    std::map<std::array<int, 4>, Scalar> coeffs_;
};

}  // namespace xprod
