#include <doctest.h>

#include <cmath>

#include "modcurv/errors.hpp"
#include "modcurv/rational.hpp"
#include "modcurv/symbol_calculus.hpp"

using namespace modcurv;
using namespace modcurv::symb;

namespace {

RatM four_over_m() { return RatM(PolyM::constant(Rational{4}), PolyM::variable()); }

Word make_word(RatM coeff, int rp, std::vector<int> xi, std::vector<Atom> atoms) {
    Word w;
    w.coeff = std::move(coeff);
    w.r_power = rp;
    w.xi = std::move(xi);
    w.atoms = std::move(atoms);
    return w;
}

} // namespace

TEST_CASE("rational arithmetic normal forms") {
    CHECK(Rational{2, 4} == Rational{1, 2});
    CHECK(Rational{1, -2} == Rational{-1, 2});
    CHECK((Rational{1, 3} + Rational{1, 6}) == Rational{1, 2});
    CHECK((Rational{3, 4} * Rational{2, 9}) == Rational{1, 6});
    CHECK_THROWS_AS((Rational{1, 0}), error);
    // 4/m + 2 reduces to (2m+4)/m
    PolyM num;
    num.coeff = {Rational{4}, Rational{2}};
    const RatM sum = four_over_m() + RatM(Rational{2});
    CHECK(sum == RatM(num, PolyM::variable()));
    CHECK(sum.eval(4.0) == doctest::Approx(3.0));
    // cancellation: (m^2-1)/(m-1) -> m+1 after reduction
    PolyM m2m1, mm1, mp1;
    m2m1.coeff = {Rational{-1}, Rational{0}, Rational{1}};
    mm1.coeff = {Rational{-1}, Rational{1}};
    mp1.coeff = {Rational{1}, Rational{1}};
    CHECK(RatM(m2m1, mm1) == RatM(mp1, PolyM::constant(Rational{1})));
}

TEST_CASE("b1 is purely imaginary with the expected single word") {
    const SymbolPoly b1 = build_b1_imag_part();
    REQUIRE(b1.words.size() == 1);
    const Word& w = b1.words[0];
    CHECK(w.coeff == RatM(Rational{-2}));
    CHECK(w.r_power == 2);
    CHECK(w.xi == std::vector<int>{0});
    REQUIRE(w.atoms.size() == 4);
    CHECK(w.atoms[0] == Atom::b0(2));
    CHECK(w.atoms[1] == Atom::kpow(1));
    CHECK(w.atoms[2] == Atom::grad(0));
    CHECK(w.atoms[3] == Atom::b0(1));
}

TEST_CASE("b2 reproduces the six-word expansion") {
    const SymbolPoly b2 = build_b2();
    CHECK(b2.words.size() == 6);
    // one pinned word: +4 r^2 xi_j xi_l b0^3 k^2 (grad2 k)_{jl} b0
    const Word probe = make_word(RatM(Rational{4}), 2, {0, 1},
                                 {Atom::b0(3), Atom::kpow(2), Atom::grad2(0, 1), Atom::b0(1)});
    const SymbolPoly canon_probe = canonicalize(SymbolPoly{{probe}});
    bool found = false;
    for (const Word& w : b2.words)
        if (w.same_shape(canon_probe.words[0]) && w.coeff == canon_probe.words[0].coeff)
            found = true;
    CHECK(found);
    // total degree -4 on every word: r_power + xi-degree - 2*sum(b0 powers)
    for (const Word& w : b2.words) {
        int b0_total = 0;
        for (const Atom& a : w.atoms)
            if (a.kind == Atom::Kind::b0) b0_total += a.p;
        CHECK(w.r_power + static_cast<int>(w.xi.size()) - 2 * b0_total == -4);
    }
}

TEST_CASE("sphere averaging") {
    const SymbolPoly avg = sphere_average(build_b2());
    // the two structurally equal r^4 gradient words merge: 2 + 4/m
    CHECK(avg.words.size() == 5);
    // degree-0 words keep their coefficient: the -1 r^2 trace word survives
    const Word trace = make_word(RatM(Rational{-1}), 2, {},
                                 {Atom::b0(2), Atom::kpow(1), Atom::grad2(0, 0), Atom::b0(1)});
    const SymbolPoly canon_trace = canonicalize(SymbolPoly{{trace}});
    bool found_trace = false, found_r6 = false;
    const RatM m8 = RatM(PolyM::constant(Rational{-8}), PolyM::variable());
    for (const Word& w : avg.words) {
        if (w.same_shape(canon_trace.words[0])) {
            found_trace = true;
            CHECK(w.coeff == RatM(Rational{-1}));
        }
        if (w.r_power == 6 && w.atoms.size() == 6 && w.coeff == m8) found_r6 = true;
    }
    CHECK(found_trace);
    CHECK(found_r6);
    // xi-degree 4 is rejected
    SymbolPoly bad{{make_word(RatM(Rational{1}), 0, {0, 0, 1, 1},
                              {Atom::grad2(0, 1), Atom::grad2(0, 1)})}};
    // canonicalization contracts repeated labels first, so build degree 4
    bad.words[0].xi = {0, 1, 2, 3};
    bad.words[0].atoms = {Atom::grad2(0, 1), Atom::grad2(2, 3)};
    CHECK_THROWS_AS(sphere_average(bad), error);
}

TEST_CASE("normalize_k_left worked examples") {
    // r^2 b0^2 k (grad2 k) b0 -> k in front, weight 0
    SymbolPoly p{{make_word(RatM(Rational{1}), 2, {},
                            {Atom::b0(2), Atom::kpow(1), Atom::grad2(0, 0), Atom::b0(1)})}};
    const SymbolPoly n1 = normalize_k_left(p);
    REQUIRE(n1.words.size() == 1);
    CHECK(n1.words[0].k_left == 1);
    CHECK(n1.words[0].y1_weight == 0);
    for (const Atom& a : n1.words[0].atoms) CHECK(a.kind != Atom::Kind::kpow);

    // r^6 b0^2 k (grad k) b0^2 k (grad k) b0 -> k^2 with y1-weight 1
    SymbolPoly q{{make_word(RatM(Rational{1}), 6, {},
                            {Atom::b0(2), Atom::kpow(1), Atom::grad(0), Atom::b0(2), Atom::kpow(1),
                             Atom::grad(0), Atom::b0(1)})}};
    const SymbolPoly n2 = normalize_k_left(q);
    REQUIRE(n2.words.size() == 1);
    CHECK(n2.words[0].k_left == 2);
    CHECK(n2.words[0].y1_weight == 1);

    // word without k is unchanged
    SymbolPoly r{{make_word(RatM(Rational{1}), 2, {},
                            {Atom::b0(2), Atom::grad2(0, 0), Atom::b0(1)})}};
    const SymbolPoly n3 = normalize_k_left(r);
    CHECK(n3.words[0].k_left == 0);
    CHECK(n3 == canonicalize(r));
}

TEST_CASE("decompose_spectral patterns and failure modes") {
    // single K word: -r^2 b0^2 (grad2 traced) b0 with k_left 1 -> K(2,1), coeff -1
    {
        Word w = make_word(RatM(Rational{-1}), 2, {},
                           {Atom::b0(2), Atom::grad2(0, 0), Atom::b0(1)});
        w.k_left = 1;
        const SpectralDecomposition d = decompose_spectral(SymbolPoly{{w}});
        REQUIRE(d.terms.size() == 1);
        CHECK(!d.terms[0].is_h);
        CHECK(d.terms[0].a == 2);
        CHECK(d.terms[0].b == 1);
        CHECK(d.terms[0].coeff == RatM(Rational{-1}));
    }
    // homogeneity violation: wrong r power
    {
        Word w = make_word(RatM(Rational{1}), 4, {},
                           {Atom::b0(2), Atom::grad2(0, 0), Atom::b0(1)});
        w.k_left = 1;
        CHECK_THROWS_AS(decompose_spectral(SymbolPoly{{w}}), error);
    }
    // unpaired gradient indices
    {
        Word w = make_word(RatM(Rational{1}), 4, {},
                           {Atom::b0(2), Atom::grad(0), Atom::b0(1), Atom::grad(1), Atom::b0(1)});
        w.k_left = 1;
        CHECK_THROWS_AS(decompose_spectral(SymbolPoly{{w}}), error);
    }
    // k-prefactor mismatch
    {
        Word w = make_word(RatM(Rational{1}), 2, {},
                           {Atom::b0(2), Atom::grad2(0, 0), Atom::b0(1)});
        w.k_left = 2;
        CHECK_THROWS_AS(decompose_spectral(SymbolPoly{{w}}), error);
    }
}

TEST_CASE("full pipeline decomposition has the published coefficients") {
    const SpectralDecomposition d =
        decompose_spectral(normalize_k_left(sphere_average(build_b2())));
    REQUIRE(d.terms.size() == 5);
    // K part: K(2,1) -> -1, K(3,1) -> 4/m
    CHECK(!d.terms[0].is_h);
    CHECK(d.terms[0].a == 2);
    CHECK(d.terms[0].coeff == RatM(Rational{-1}));
    CHECK(d.terms[1].a == 3);
    CHECK(d.terms[1].coeff == four_over_m());
    // H part: H(2,1,1) -> 4/m+2, H(2,2,1) with y1 weight -> -4/m, H(3,1,1) -> -8/m
    PolyM num;
    num.coeff = {Rational{4}, Rational{2}};
    CHECK(d.terms[2].is_h);
    CHECK(d.terms[2].coeff == RatM(num, PolyM::variable()));
    CHECK(d.terms[3].a == 2);
    CHECK(d.terms[3].b == 2);
    CHECK(d.terms[3].y1_weight == 1);
    CHECK(d.terms[3].coeff == RatM(PolyM::constant(Rational{-4}), PolyM::variable()));
    CHECK(d.terms[4].a == 3);
    CHECK(d.terms[4].coeff == RatM(PolyM::constant(Rational{-8}), PolyM::variable()));
}

TEST_CASE("numeric crosscheck at the pinned points") {
    const SpectralDecomposition d =
        decompose_spectral(normalize_k_left(sphere_average(build_b2())));
    CHECK(numeric_crosscheck(d, 2.0, 0.5, 4.0) < 1e-9);
    CHECK(numeric_crosscheck(d, 1.3, 1.7, 3.0) < 1e-9);
    CHECK(numeric_crosscheck(d, 1.0, 1.0, 3.0) < 1e-11); // Gamma values at the origin
}

TEST_CASE("printers") {
    const SymbolPoly b2 = build_b2();
    const std::string paper = to_paper_string(b2);
    CHECK(paper.find("b0^3") != std::string::npos);
    CHECK(paper.find("(D2k)") != std::string::npos);
    const SpectralDecomposition d =
        decompose_spectral(normalize_k_left(sphere_average(b2)));
    const std::string dec = to_paper_string(d);
    CHECK(dec.find("K_{2,1}") != std::string::npos);
    CHECK(dec.find("H_{2,2,1}") != std::string::npos);
    CHECK(dec.find("y1^1") != std::string::npos);
    const std::string js = decomposition_to_json(d);
    CHECK(js.find("\"family\"") != std::string::npos);
    CHECK(js.find("4/m") != std::string::npos);
}
