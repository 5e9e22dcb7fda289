#include "modcurv/symbol_calculus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "modcurv/spectral.hpp"

namespace modcurv::symb {

namespace {

// ---- construction-stage words with Gaussian-rational coefficients ----

struct CWord {
    Rational re{0}, im{0};
    int r_power = 0;
    std::vector<int> xi;
    std::vector<Atom> atoms;
};

using CPoly = std::vector<CWord>;

int atom_rank(const Atom& a) {
    switch (a.kind) {
        case Atom::Kind::b0: return 0;
        case Atom::Kind::kpow: return 1;
        case Atom::Kind::grad_k: return 2;
        case Atom::Kind::grad2_k: return 3;
    }
    return 4;
}

bool atom_less(const Atom& x, const Atom& y) {
    if (atom_rank(x) != atom_rank(y)) return atom_rank(x) < atom_rank(y);
    if (x.p != y.p) return x.p < y.p;
    if (x.i != y.i) return x.i < y.i;
    return x.j < y.j;
}

// merge commuting (b0, kpow) runs: each run becomes [b0(total)][kpow(total)]
template <typename W>
void merge_segments(W& w) {
    std::vector<Atom> out;
    std::size_t i = 0;
    const auto& in = w.atoms;
    while (i < in.size()) {
        if (in[i].kind == Atom::Kind::b0 || in[i].kind == Atom::Kind::kpow) {
            int b0p = 0, kp = 0;
            while (i < in.size() &&
                   (in[i].kind == Atom::Kind::b0 || in[i].kind == Atom::Kind::kpow)) {
                (in[i].kind == Atom::Kind::b0 ? b0p : kp) += in[i].p;
                ++i;
            }
            if (b0p > 0) out.push_back(Atom::b0(b0p));
            if (kp > 0) out.push_back(Atom::kpow(kp));
        } else {
            out.push_back(in[i]);
            ++i;
        }
    }
    w.atoms = std::move(out);
}

// collapse repeated xi labels (xi_i * xi_i summed = r^2) and sort
template <typename W>
void reduce_xi(W& w) {
    std::sort(w.xi.begin(), w.xi.end());
    std::vector<int> kept;
    std::size_t i = 0;
    while (i < w.xi.size()) {
        if (i + 1 < w.xi.size() && w.xi[i] == w.xi[i + 1]) {
            w.r_power += 2;
            i += 2;
        } else {
            kept.push_back(w.xi[i]);
            ++i;
        }
    }
    w.xi = std::move(kept);
}

template <typename W>
std::vector<int> word_labels(const W& w) {
    std::set<int> s;
    for (const auto& a : w.atoms) {
        if (a.kind == Atom::Kind::grad_k) s.insert(a.i);
        if (a.kind == Atom::Kind::grad2_k) {
            s.insert(a.i);
            s.insert(a.j);
        }
    }
    for (int x : w.xi) s.insert(x);
    return {s.begin(), s.end()};
}

template <typename W>
void apply_relabel(W& w, const std::map<int, int>& ren) {
    for (auto& a : w.atoms) {
        if (a.kind == Atom::Kind::grad_k) a.i = ren.at(a.i);
        if (a.kind == Atom::Kind::grad2_k) {
            a.i = ren.at(a.i);
            a.j = ren.at(a.j);
            if (a.j < a.i) std::swap(a.i, a.j);
        }
    }
    for (auto& x : w.xi) x = ren.at(x);
    std::sort(w.xi.begin(), w.xi.end());
}

template <typename W>
std::string shape_key(const W& w, int k_left, int y1_weight) {
    std::ostringstream os;
    os << "r" << w.r_power << "|K" << k_left << "|Y" << y1_weight << "|x";
    for (int x : w.xi) os << x << ",";
    os << "|";
    for (const auto& a : w.atoms) {
        switch (a.kind) {
            case Atom::Kind::b0: os << "B" << a.p; break;
            case Atom::Kind::kpow: os << "k" << a.p; break;
            case Atom::Kind::grad_k: os << "G" << a.i; break;
            case Atom::Kind::grad2_k: os << "H" << a.i << "." << a.j; break;
        }
        os << ".";
    }
    return os.str();
}

// pick the relabelling of the (at most 3) dummy indices giving the least key
template <typename W>
void canonical_relabel(W& w, int k_left = 0, int y1_weight = 0) {
    merge_segments(w);
    reduce_xi(w);
    std::vector<int> labels = word_labels(w);
    if (labels.empty()) return;
    std::vector<int> target(labels.size());
    for (std::size_t i = 0; i < target.size(); ++i) target[i] = static_cast<int>(i);
    std::vector<int> perm = target;
    std::string best;
    W best_w = w;
    std::sort(perm.begin(), perm.end());
    do {
        std::map<int, int> ren;
        for (std::size_t i = 0; i < labels.size(); ++i) ren[labels[i]] = perm[i];
        W cand = w;
        apply_relabel(cand, ren);
        const std::string key = shape_key(cand, k_left, y1_weight);
        if (best.empty() || key < best) {
            best = key;
            best_w = cand;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    w = best_w;
}

void c_canonicalize(CPoly& p) {
    for (auto& w : p) canonical_relabel(w);
    std::map<std::string, CWord> merged;
    for (auto& w : p) {
        const std::string key = shape_key(w, 0, 0);
        auto it = merged.find(key);
        if (it == merged.end()) {
            merged.emplace(key, w);
        } else {
            it->second.re = it->second.re + w.re;
            it->second.im = it->second.im + w.im;
        }
    }
    p.clear();
    for (auto& [k, w] : merged)
        if (!(w.re.is_zero() && w.im.is_zero())) p.push_back(w);
}

// ---- the vertical differential, fused with the contraction ----

// One derivative D_e of a word, reported as (word, index-used) pairs: the
// index the appended gradient factor of a_j must carry (e itself, or the
// label freed by hitting an existing xi).
struct DTerm {
    CWord w;
    int idx;
};

std::vector<DTerm> d_xi(const CWord& w, int fresh) {
    std::vector<DTerm> out;
    // r^p -> p r^{p-2} xi_fresh
    if (w.r_power > 0) {
        CWord t = w;
        t.re = t.re * Rational{w.r_power};
        t.im = t.im * Rational{w.r_power};
        t.r_power -= 2;
        t.xi.push_back(fresh);
        out.push_back({std::move(t), fresh});
    }
    // existing xi_j: delta contraction, the partner inherits j
    for (std::size_t i = 0; i < w.xi.size(); ++i) {
        CWord t = w;
        t.xi.erase(t.xi.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back({std::move(t), w.xi[i]});
    }
    // b0^p -> -2 p xi_fresh k b0^{p+1} (k and b0 commute)
    for (std::size_t i = 0; i < w.atoms.size(); ++i) {
        if (w.atoms[i].kind != Atom::Kind::b0) continue;
        CWord t = w;
        t.re = t.re * Rational{-2 * w.atoms[i].p};
        t.im = t.im * Rational{-2 * w.atoms[i].p};
        t.atoms[i].p += 1;
        t.atoms.insert(t.atoms.begin() + static_cast<std::ptrdiff_t>(i) + 1, Atom::kpow(1));
        t.xi.push_back(fresh);
        out.push_back({std::move(t), fresh});
    }
    return out;
}

// multiply the whole word by (-i) or by a rational
void times_minus_i(CWord& w) {
    const Rational re = w.re, im = w.im;
    w.re = im;
    w.im = -re;
}

// a_1(p, p2) = (-i) (D_e p) . (r^2 grad_k(e))
CPoly a1_p2(const CPoly& p, int& fresh_counter) {
    CPoly out;
    for (const auto& w : p) {
        const int e = fresh_counter++;
        for (auto& dt : d_xi(w, e)) {
            CWord t = std::move(dt.w);
            times_minus_i(t);
            t.r_power += 2;
            t.atoms.push_back(Atom::grad(dt.idx));
            out.push_back(std::move(t));
        }
    }
    return out;
}

// a_2(p, p2) = ((-i)^2/2) (D_{e1} D_{e2} p) . (r^2 grad2_k(e1,e2))
CPoly a2_p2(const CPoly& p, int& fresh_counter) {
    CPoly out;
    for (const auto& w : p) {
        const int e1 = fresh_counter++;
        const int e2 = fresh_counter++;
        for (auto& d1 : d_xi(w, e1)) {
            for (auto& d2 : d_xi(d1.w, e2)) {
                CWord t = d2.w;
                // (-i)^2/2 = -1/2
                t.re = t.re * Rational{-1, 2};
                t.im = t.im * Rational{-1, 2};
                t.r_power += 2;
                int i1 = d1.idx, i2 = d2.idx;
                // the second derivative may have consumed xi_{e1}; the freed
                // label then already equals e1 and pairs the two slots
                t.atoms.push_back(Atom::grad2(std::min(i1, i2), std::max(i1, i2)));
                out.push_back(std::move(t));
            }
        }
    }
    return out;
}

CPoly negate_times_b0(CPoly p) {
    for (auto& w : p) {
        w.re = -w.re;
        w.im = -w.im;
        w.atoms.push_back(Atom::b0(1));
    }
    return p;
}

CPoly make_b1(int& fresh) {
    CPoly b0{CWord{Rational{1}, Rational{0}, 0, {}, {Atom::b0(1)}}};
    // p1 = p0 = 0: only the a_1(b0,p2) term survives
    CPoly b1 = negate_times_b0(a1_p2(b0, fresh));
    c_canonicalize(b1);
    return b1;
}

SymbolPoly from_cpoly_real(const CPoly& p) {
    SymbolPoly out;
    for (const auto& w : p) {
        if (!w.im.is_zero())
            fail(errc::internal_mismatch, "symbol calculus: residual imaginary coefficient");
        Word v;
        v.coeff = RatM(w.re);
        v.r_power = w.r_power;
        v.xi = w.xi;
        v.atoms = w.atoms;
        out.words.push_back(std::move(v));
    }
    return out;
}

std::string word_key(const Word& w) { return shape_key(w, w.k_left, w.y1_weight); }

} // namespace

bool SymbolPoly::operator==(const SymbolPoly& o) const {
    if (words.size() != o.words.size()) return false;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (!words[i].same_shape(o.words[i])) return false;
        if (!(words[i].coeff == o.words[i].coeff)) return false;
    }
    return true;
}

SymbolPoly canonicalize(const SymbolPoly& p) {
    SymbolPoly tmp = p;
    for (auto& w : tmp.words) canonical_relabel(w, w.k_left, w.y1_weight);
    std::map<std::string, Word> merged;
    for (auto& w : tmp.words) {
        const std::string key = word_key(w);
        auto it = merged.find(key);
        if (it == merged.end())
            merged.emplace(key, w);
        else
            it->second.coeff = it->second.coeff + w.coeff;
    }
    SymbolPoly out;
    for (auto& [k, w] : merged)
        if (!w.coeff.is_zero()) out.words.push_back(std::move(w));
    return out;
}

SymbolPoly build_b1_imag_part() {
    int fresh = 0;
    CPoly b1 = make_b1(fresh);
    // b1 is purely imaginary: report the i-part as a real polynomial
    SymbolPoly out;
    for (const auto& w : b1) {
        if (!w.re.is_zero())
            fail(errc::internal_mismatch, "b1 must be purely imaginary");
        Word v;
        v.coeff = RatM(w.im);
        v.r_power = w.r_power;
        v.xi = w.xi;
        v.atoms = w.atoms;
        out.words.push_back(std::move(v));
    }
    return canonicalize(out);
}

SymbolPoly build_b2() {
    int fresh = 0;
    CPoly b0{CWord{Rational{1}, Rational{0}, 0, {}, {Atom::b0(1)}}};
    CPoly b1 = make_b1(fresh);
    CPoly sum = a1_p2(b1, fresh);
    CPoly a2 = a2_p2(b0, fresh);
    sum.insert(sum.end(), a2.begin(), a2.end());
    CPoly b2 = negate_times_b0(std::move(sum));
    c_canonicalize(b2);
    return canonicalize(from_cpoly_real(b2));
}

SymbolPoly sphere_average(const SymbolPoly& p) {
    SymbolPoly out;
    for (const auto& w : p.words) {
        if (w.xi.empty()) {
            out.words.push_back(w);
            continue;
        }
        if (w.xi.size() != 2)
            fail(errc::unsupported_monomial, "sphere_average: xi-degree must be 0 or 2");
        Word t = w;
        const int i = t.xi[0], j = t.xi[1];
        t.xi.clear();
        t.r_power += 2;
        t.coeff = t.coeff * RatM::one_over_m();
        if (i != j) {
            std::map<int, int> ren;
            for (int lbl : word_labels(w)) ren[lbl] = lbl;
            ren[j] = i;
            apply_relabel(t, ren);
        }
        out.words.push_back(std::move(t));
    }
    return canonicalize(out);
}

SymbolPoly normalize_k_left(const SymbolPoly& p) {
    SymbolPoly out;
    for (const auto& w : p.words) {
        Word t;
        t.coeff = w.coeff;
        t.r_power = w.r_power;
        t.xi = w.xi;
        t.k_left = w.k_left;
        t.y1_weight = w.y1_weight;
        int rho_seen = 0;
        for (const auto& a : w.atoms) {
            if (a.kind == Atom::Kind::kpow) {
                t.k_left += a.p;
                if (rho_seen == 1) t.y1_weight += a.p;
                if (rho_seen >= 2)
                    fail(errc::pattern_mismatch,
                         "normalize_k_left: k beyond the second slot needs y2 weights");
                continue;
            }
            if (a.kind == Atom::Kind::grad_k || a.kind == Atom::Kind::grad2_k) ++rho_seen;
            t.atoms.push_back(a);
        }
        out.words.push_back(std::move(t));
    }
    return canonicalize(out);
}

SpectralDecomposition decompose_spectral(const SymbolPoly& p) {
    SpectralDecomposition d;
    for (const auto& w : p.words) {
        if (!w.xi.empty()) fail(errc::pattern_mismatch, "decompose_spectral: xi factors remain");
        const auto& a = w.atoms;
        SpectralTerm t;
        t.coeff = w.coeff;
        t.y1_weight = w.y1_weight;
        int lsum = 0;
        if (a.size() == 3 && a[0].kind == Atom::Kind::b0 && a[1].kind == Atom::Kind::grad2_k &&
            a[2].kind == Atom::Kind::b0) {
            if (a[1].i != a[1].j)
                fail(errc::pattern_mismatch, "decompose_spectral: untraced second gradient");
            t.is_h = false;
            t.a = a[0].p;
            t.b = a[2].p;
            lsum = t.a + t.b;
            if (w.k_left != lsum - 2)
                fail(errc::pattern_mismatch, "decompose_spectral: K-word k-prefactor mismatch");
        } else if (a.size() == 5 && a[0].kind == Atom::Kind::b0 &&
                   a[1].kind == Atom::Kind::grad_k && a[2].kind == Atom::Kind::b0 &&
                   a[3].kind == Atom::Kind::grad_k && a[4].kind == Atom::Kind::b0) {
            if (a[1].i != a[3].i)
                fail(errc::pattern_mismatch, "decompose_spectral: unpaired gradient indices");
            t.is_h = true;
            t.a = a[0].p;
            t.b = a[2].p;
            t.c = a[4].p;
            lsum = t.a + t.b + t.c;
            if (w.k_left != lsum - 3)
                fail(errc::pattern_mismatch, "decompose_spectral: H-word k-prefactor mismatch");
        } else {
            fail(errc::pattern_mismatch, "decompose_spectral: word outside the K/H patterns");
        }
        if (w.r_power != 2 * (lsum - 2))
            fail(errc::homogeneity_violation, "decompose_spectral: r-power off the -4 grading");
        d.terms.push_back(std::move(t));
    }
    std::sort(d.terms.begin(), d.terms.end(), [](const SpectralTerm& x, const SpectralTerm& y) {
        if (x.is_h != y.is_h) return !x.is_h;
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        if (x.c != y.c) return x.c < y.c;
        return x.y1_weight < y.y1_weight;
    });
    return d;
}

double numeric_crosscheck(const SpectralDecomposition& d, double s, double t, double m) {
    double k_val = 0.0, h_val = 0.0;
    for (const auto& term : d.terms) {
        const double c = term.coeff.eval(m);
        if (term.is_h) {
            const SpectralIndex idx{term.a, term.b, term.c, m};
            h_val += c * std::pow(s, term.y1_weight) * h_family(idx, s, t);
        } else {
            const SpectralIndex idx{term.a, term.b, std::nullopt, m};
            k_val += c * std::pow(s, term.y1_weight) * k_family(idx, s);
        }
    }
    const double k_ref = k_delta(s, m);
    const double h_ref = h_delta(s, t, m);
    const double dk = std::abs(k_val - k_ref) / std::max({1.0, std::abs(k_ref)});
    const double dh = std::abs(h_val - h_ref) / std::max({1.0, std::abs(h_ref)});
    return std::max(dk, dh);
}

namespace {

const char* index_name(int i) {
    static const char* names[] = {"j", "l", "p", "q"};
    return i >= 0 && i < 4 ? names[i] : "?";
}

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    os << w.coeff.str() << " ";
    if (w.r_power > 0) os << "r^" << w.r_power << " ";
    for (int x : w.xi) os << "xi_" << index_name(x) << " ";
    if (w.k_left > 0) os << "k^" << w.k_left << " . ";
    if (w.y1_weight > 0) os << "y1^" << w.y1_weight << " ";
    bool first = true;
    for (const auto& a : w.atoms) {
        if (!first) os << ".";
        first = false;
        switch (a.kind) {
            case Atom::Kind::b0: os << "b0" << (a.p > 1 ? "^" + std::to_string(a.p) : ""); break;
            case Atom::Kind::kpow: os << "k" << (a.p > 1 ? "^" + std::to_string(a.p) : ""); break;
            case Atom::Kind::grad_k: os << "(Dk)_" << index_name(a.i); break;
            case Atom::Kind::grad2_k:
                os << "(D2k)_{" << index_name(a.i) << "," << index_name(a.j) << "}";
                break;
        }
    }
    return os.str();
}

} // namespace

std::string to_paper_string(const SymbolPoly& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.words.size(); ++i) {
        if (i) os << "\n";
        os << "  " << word_to_string(p.words[i]);
    }
    return os.str();
}

std::string to_paper_string(const SpectralDecomposition& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : d.terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.str() << ")";
        if (t.y1_weight > 0) os << " y1^" << t.y1_weight;
        if (t.is_h)
            os << " H_{" << t.a << "," << t.b << "," << t.c << "}";
        else
            os << " K_{" << t.a << "," << t.b << "}";
    }
    return os.str();
}

std::string decomposition_to_json(const SpectralDecomposition& d) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : d.terms) {
        nlohmann::json j;
        j["family"] = t.is_h ? "H" : "K";
        j["indices"] = t.is_h ? std::vector<int>{t.a, t.b, t.c} : std::vector<int>{t.a, t.b};
        j["coeff"] = t.coeff.str();
        j["y1_weight"] = t.y1_weight;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

} // namespace modcurv::symb
