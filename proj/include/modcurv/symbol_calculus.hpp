#pragma once

#include <string>
#include <vector>

#include "modcurv/rational.hpp"

namespace modcurv::symb {

// One noncommutative factor of a symbol word. b0 = (k r^2 - lambda)^{-1};
// k commutes with b0, gradients commute with neither.
struct Atom {
    enum class Kind { b0, kpow, grad_k, grad2_k };
    Kind kind;
    int p = 1; // power for b0 / kpow
    int i = 0; // first index for grad_k / grad2_k
    int j = 0; // second index for grad2_k

    static Atom b0(int power) { return {Kind::b0, power, 0, 0}; }
    static Atom kpow(int power) { return {Kind::kpow, power, 0, 0}; }
    static Atom grad(int idx) { return {Kind::grad_k, 1, idx, 0}; }
    static Atom grad2(int a, int b) { return {Kind::grad2_k, 1, a, b}; }
    bool operator==(const Atom& o) const = default;
};

// A symbol word: coeff * r^{r_power} * xi-monomial * atom product, with the
// k-powers optionally moved out front (k_left) carrying a y1-conjugation
// weight picked up from crossing the first gradient factor.
struct Word {
    RatM coeff;
    int r_power = 0;        // literal power of r (even)
    std::vector<int> xi;    // sorted index multiset
    std::vector<Atom> atoms;
    int k_left = 0;
    int y1_weight = 0;

    bool same_shape(const Word& o) const {
        return r_power == o.r_power && xi == o.xi && atoms == o.atoms && k_left == o.k_left &&
               y1_weight == o.y1_weight;
    }
};

struct SymbolPoly {
    std::vector<Word> words;

    bool operator==(const SymbolPoly& o) const;
};

// canonical form: indices relabelled to the lexicographically least choice,
// commuting (b0,k) segments merged, equal-shape words summed, sorted.
SymbolPoly canonicalize(const SymbolPoly& p);

// b2 of Delta_k = k*Delta via the a_j recursion on the flat torus
// (p2 = k|xi|^2, p1 = p0 = 0); coefficients exact, imaginary parts must
// cancel (asserted).
SymbolPoly build_b2();

// intermediate b1 = -a1(b0,p2) b0 with its purely imaginary coefficient
// reported separately (coeff stores the imaginary part; b1 = i * poly)
SymbolPoly build_b1_imag_part();

// xi-degree 0/2 words only; degree-2 monomials are replaced by
// (r^2/m) delta_{ij} (overall sphere volume dropped).
SymbolPoly sphere_average(const SymbolPoly& p);

// move k powers to the front; a k crossing the first gradient gains y1-weight
SymbolPoly normalize_k_left(const SymbolPoly& p);

struct SpectralTerm {
    bool is_h = false;
    int a = 0, b = 0, c = 0; // K(a,b) or H(a,b,c)
    int y1_weight = 0;
    RatM coeff;
    bool operator==(const SpectralTerm& o) const = default;
};

struct SpectralDecomposition {
    std::vector<SpectralTerm> terms; // K terms first, then H, sorted by indices
    bool operator==(const SpectralDecomposition& o) const = default;
};

// words must match b0^{l0} rho1 b0^{l1} [rho2 b0^{l2}] with the homogeneity
// r_power = 2(sum l - 2) and the uniform k-prefactor; rho patterns are a
// traced grad2 (K) or an index-paired grad pair (H).
SpectralDecomposition decompose_spectral(const SymbolPoly& p);

// evaluates the decomposition through the spectral families at (s,t,m) and
// returns the worst scaled deviation from the k_delta/h_delta closed forms
double numeric_crosscheck(const SpectralDecomposition& d, double s, double t, double m);

std::string to_paper_string(const SymbolPoly& p);
std::string to_paper_string(const SpectralDecomposition& d);
std::string decomposition_to_json(const SpectralDecomposition& d);

} // namespace modcurv::symb
