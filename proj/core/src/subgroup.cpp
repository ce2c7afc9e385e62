#include "solhnn/subgroup.hpp"

#include <algorithm>
#include <sstream>

namespace solhnn {

namespace {

LaurentPoly poly_from_row(const IntVector &row, long long lo) {
    LaurentPoly p;
    for (std::size_t j = 0; j < row.size(); ++j)
        p = p + LaurentPoly::monomial(row[j], lo + static_cast<long long>(j));
    return p;
}

IntVector row_from_poly(const LaurentPoly &p, long long lo, std::size_t dim) {
    IntVector r(dim, 0);
    for (auto &[e, c] : p.terms()) {
        long long j = e - lo;
        if (j < 0 || j >= static_cast<long long>(dim))
            throw std::logic_error("row_from_poly: exponent outside window");
        r[static_cast<std::size_t>(j)] = c;
    }
    return r;
}

WindowLattice rebuild_wreath(std::vector<LaurentPoly> polys, long long denom_exp) {
    // minimal window hull, HNF basis, minimal denominator
    polys.erase(std::remove_if(polys.begin(), polys.end(), [](const LaurentPoly &p) { return p.is_zero(); }),
                polys.end());
    WindowLattice B;
    B.kind = GroupSpec::Kind::Wreath;
    if (polys.empty()) {
        B.lo = 0;
        B.L = Lattice(0);
        B.denom_exp = 0;
        return B;
    }
    while (denom_exp > 0) {
        std::vector<LaurentPoly> divided;
        divided.reserve(polys.size());
        bool ok = true;
        for (auto &p : polys) {
            auto q = p.div_one_plus_x();
            if (!q) {
                ok = false;
                break;
            }
            divided.push_back(std::move(*q));
        }
        if (!ok)
            break;
        polys = std::move(divided);
        --denom_exp;
    }
    long long lo = polys[0].min_exp(), hi = polys[0].max_exp();
    for (auto &p : polys) {
        lo = std::min(lo, p.min_exp());
        hi = std::max(hi, p.max_exp());
    }
    std::size_t dim = static_cast<std::size_t>(hi - lo + 1);
    std::vector<IntVector> rows;
    rows.reserve(polys.size());
    for (auto &p : polys)
        rows.push_back(row_from_poly(p, lo, dim));
    Lattice L = hnf(dim, rows);
    // the HNF may have freed boundary columns; trim to the hull again
    std::vector<LaurentPoly> hnf_polys;
    for (auto &r : L.basis())
        hnf_polys.push_back(poly_from_row(r, lo));
    long long lo2 = hnf_polys[0].min_exp(), hi2 = hnf_polys[0].max_exp();
    for (auto &p : hnf_polys) {
        lo2 = std::min(lo2, p.min_exp());
        hi2 = std::max(hi2, p.max_exp());
    }
    std::size_t dim2 = static_cast<std::size_t>(hi2 - lo2 + 1);
    std::vector<IntVector> rows2;
    for (auto &p : hnf_polys)
        rows2.push_back(row_from_poly(p, lo2, dim2));
    B.lo = lo2;
    B.L = Lattice(dim2, std::move(rows2));
    B.denom_exp = denom_exp;
    return B;
}

WindowLattice rebuild_abelian(const GroupSpec &g, std::vector<IntVector> vecs, long long denom_exp) {
    WindowLattice B;
    B.kind = GroupSpec::Kind::FreeAbelian;
    B.lo = 0;
    vecs.erase(std::remove_if(vecs.begin(), vecs.end(),
                              [](const IntVector &v) {
                                  return std::all_of(v.begin(), v.end(), [](const Int &x) { return x == 0; });
                              }),
               vecs.end());
    if (vecs.empty()) {
        B.L = Lattice(g.rank());
        B.denom_exp = 0;
        return B;
    }
    while (denom_exp > 0) {
        std::vector<IntVector> divided;
        bool ok = true;
        for (auto &v : vecs) {
            auto q = solve_integral(g.abelian().M, v);
            if (!q) {
                ok = false;
                break;
            }
            divided.push_back(std::move(*q));
        }
        if (!ok)
            break;
        vecs = std::move(divided);
        --denom_exp;
    }
    B.L = hnf(g.rank(), vecs);
    B.denom_exp = denom_exp;
    return B;
}

} // namespace

WindowLattice WindowLattice::from_vectors(const GroupSpec &g, const std::vector<IntVector> &gens) {
    if (g.kind() != GroupSpec::Kind::FreeAbelian)
        throw std::invalid_argument("from_vectors: free-abelian base required");
    for (auto &v : gens)
        if (v.size() != g.rank())
            throw std::invalid_argument("from_vectors: generator dimension mismatch");
    return rebuild_abelian(g, gens, 0);
}

WindowLattice WindowLattice::from_polys(const std::vector<LaurentPoly> &gens) {
    return rebuild_wreath(gens, 0);
}

WindowLattice WindowLattice::full_fiber(const GroupSpec &g) {
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        IntVector e(g.rank(), 0);
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    return from_vectors(g, gens);
}

std::vector<LaurentPoly> WindowLattice::poly_basis() const {
    if (kind != GroupSpec::Kind::Wreath)
        throw std::invalid_argument("poly_basis: wreath lattice required");
    std::vector<LaurentPoly> out;
    for (auto &r : L.basis())
        out.push_back(poly_from_row(r, lo));
    return out;
}

bool operator==(const WindowLattice &a, const WindowLattice &b) {
    return a.kind == b.kind && a.lo == b.lo && a.denom_exp == b.denom_exp && a.L == b.L;
}

std::string fiber_str(const FiberElement &w) {
    if (auto *v = std::get_if<IntVector>(&w)) {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < v->size(); ++i)
            os << (i ? "," : "") << (*v)[i];
        os << ")";
        return os.str();
    }
    return std::get<LaurentPoly>(w).str();
}

WindowLattice shift_lattice(const WindowLattice &B, long long i) {
    if (B.kind != GroupSpec::Kind::Wreath) {
        if (i != 0)
            throw std::invalid_argument("shift_lattice: abelian lattices cannot be shifted");
        return B;
    }
    WindowLattice r = B;
    if (!r.is_zero())
        r.lo += i;
    return r;
}

WindowLattice theta_lattice(const GroupSpec &g, const WindowLattice &B, long long j) {
    if (B.is_zero())
        return B;
    long long denom = B.denom_exp - j; // value is theta^(-denom_exp) of the stored lattice
    if (g.kind() == GroupSpec::Kind::Wreath) {
        std::vector<LaurentPoly> polys = B.poly_basis();
        if (denom < 0) {
            for (auto &p : polys)
                p = mul_one_plus_x_pow(p, -denom);
            denom = 0;
        }
        return rebuild_wreath(std::move(polys), denom);
    }
    std::vector<IntVector> vecs = B.L.basis();
    if (denom < 0) {
        IntMatrix P = g.abelian().M.pow(-denom);
        for (auto &v : vecs)
            v = P.apply(v);
        denom = 0;
    }
    return rebuild_abelian(g, std::move(vecs), denom);
}

WindowLattice conj_lattice(const GroupSpec &g, const HnnElement &x, const WindowLattice &B) {
    if ((B.kind == GroupSpec::Kind::Wreath) != (g.kind() == GroupSpec::Kind::Wreath))
        throw std::invalid_argument("conj_lattice: lattice kind does not match group");
    long long j = x.l - x.k;
    if (g.kind() == GroupSpec::Kind::FreeAbelian)
        return theta_lattice(g, B, j);
    long long i = std::get<WreathElement>(x.w).shift;
    return shift_lattice(theta_lattice(g, B, j), i);
}

namespace {

struct AlignedPair {
    std::size_t dim;
    long long lo;
    Lattice L1{0}, L2{0};
};

// bring two window lattices to a common window and denominator level
AlignedPair align(const WindowLattice &B1, const WindowLattice &B2) {
    if (B1.kind != B2.kind)
        throw std::invalid_argument("lattice comparison: base kind mismatch");
    long long e = std::max(B1.denom_exp, B2.denom_exp);
    if (B1.kind == GroupSpec::Kind::FreeAbelian)
        throw std::logic_error("align: abelian handled separately");
    std::vector<LaurentPoly> p1, p2;
    for (auto &p : B1.poly_basis())
        p1.push_back(mul_one_plus_x_pow(p, e - B1.denom_exp));
    for (auto &p : B2.poly_basis())
        p2.push_back(mul_one_plus_x_pow(p, e - B2.denom_exp));
    long long lo = 0, hi = 0;
    bool any = false;
    for (auto *v : {&p1, &p2})
        for (auto &p : *v) {
            if (p.is_zero())
                continue;
            if (!any) {
                lo = p.min_exp();
                hi = p.max_exp();
                any = true;
            } else {
                lo = std::min(lo, p.min_exp());
                hi = std::max(hi, p.max_exp());
            }
        }
    AlignedPair a;
    a.dim = any ? static_cast<std::size_t>(hi - lo + 1) : 0;
    a.lo = lo;
    std::vector<IntVector> r1, r2;
    for (auto &p : p1)
        r1.push_back(row_from_poly(p, lo, a.dim));
    for (auto &p : p2)
        r2.push_back(row_from_poly(p, lo, a.dim));
    a.L1 = hnf(a.dim, r1);
    a.L2 = hnf(a.dim, r2);
    return a;
}

std::optional<IntVector> first_outside(const Lattice &sub_candidate, const Lattice &super) {
    for (auto &b : sub_candidate.basis())
        if (!super.contains(b))
            return b;
    return std::nullopt;
}

} // namespace

LatticeCmp lattice_compare(const GroupSpec &g, const WindowLattice &B1, const WindowLattice &B2) {
    if (B1.kind != B2.kind)
        throw std::invalid_argument("lattice_compare: base kind mismatch");
    Lattice L1{0}, L2{0};
    long long lo = 0;
    bool wreath = B1.kind == GroupSpec::Kind::Wreath;
    if (wreath) {
        AlignedPair a = align(B1, B2);
        L1 = a.L1;
        L2 = a.L2;
        lo = a.lo;
    } else {
        // clear denominators to the common level e = max(e1, e2)
        long long e = std::max(B1.denom_exp, B2.denom_exp);
        auto lift = [&](const WindowLattice &B) {
            if (B.is_zero() || B.denom_exp == e)
                return B.L;
            IntMatrix P = g.abelian().M.pow(e - B.denom_exp);
            std::vector<IntVector> vecs;
            for (auto &v : B.L.basis())
                vecs.push_back(P.apply(v));
            return hnf(B.L.ambient_dim(), vecs);
        };
        L1 = lift(B1);
        L2 = lift(B2);
        if (L1.ambient_dim() != L2.ambient_dim() && !L1.is_zero() && !L2.is_zero())
            throw std::invalid_argument("lattice_compare: ambient dimension mismatch");
    }
    auto wrap = [&](const IntVector &v) -> FiberElement {
        if (wreath)
            return poly_from_row(v, lo);
        return v;
    };
    if (L1.is_zero() && L2.is_zero())
        return {CmpVerdict::Equal, std::nullopt};
    if (L1.is_zero())
        return {CmpVerdict::FirstInSecond, wrap(L2.basis().front())};
    if (L2.is_zero())
        return {CmpVerdict::SecondInFirst, wrap(L1.basis().front())};
    auto out12 = first_outside(L1, L2);
    auto out21 = first_outside(L2, L1);
    if (!out12 && !out21)
        return {CmpVerdict::Equal, std::nullopt};
    if (!out12)
        return {CmpVerdict::FirstInSecond, wrap(*out21)};
    if (!out21)
        return {CmpVerdict::SecondInFirst, wrap(*out12)};
    return {CmpVerdict::Incomparable, wrap(*out12)};
}

DegreeExtremes degree_extremes(const WindowLattice &B, long long search_bound) {
    if (B.kind != GroupSpec::Kind::Wreath)
        throw std::invalid_argument("degree_extremes: wreath lattice required");
    if (B.is_zero())
        throw std::invalid_argument("degree_extremes: zero lattice has no degrees");
    if (search_bound < 1)
        throw std::invalid_argument("degree_extremes: positive search bound required");
    std::vector<LaurentPoly> basis = B.poly_basis();
    // maximum: a dominated combination hits the support hull at both ends
    Int big = 1;
    for (auto &p : basis)
        for (auto &[e, c] : p.terms())
            big = std::max(big, Int(abs_int(c) + 1));
    LaurentPoly max_witness;
    Int scale = 1;
    for (auto &p : basis) {
        max_witness = max_witness + scale * p;
        scale *= big;
    }
    DegreeExtremes out{max_witness.degree() - B.denom_exp, max_witness, 0, LaurentPoly(), search_bound};
    // minimum: exhaustive over bounded coefficient combinations
    std::size_t n = basis.size();
    std::vector<long long> c(n, -search_bound);
    bool have_min = false;
    while (true) {
        LaurentPoly comb;
        for (std::size_t i = 0; i < n; ++i)
            if (c[i] != 0)
                comb = comb + Int(c[i]) * basis[i];
        if (!comb.is_zero()) {
            long long d = comb.degree();
            if (!have_min || d < out.min_degree) {
                out.min_degree = d;
                out.min_witness = comb;
                have_min = true;
            }
        }
        std::size_t i = 0;
        while (i < n && c[i] == search_bound) {
            c[i] = -search_bound;
            ++i;
        }
        if (i == n)
            break;
        ++c[i];
    }
    out.min_degree -= B.denom_exp;
    return out;
}

Functional Functional::linear(const GroupSpec &g, IntVector covector, Int modulus) {
    if (modulus < 0 || modulus == 1)
        throw std::invalid_argument("Functional: modulus must be 0 (over Z) or >= 2");
    auto reduce = [&](const Int &x) { return modulus == 0 ? x : mod_floor(x, modulus); };
    if (g.kind() == GroupSpec::Kind::FreeAbelian) {
        if (covector.size() != g.rank())
            throw std::invalid_argument("Functional: covector rank mismatch");
        // phi(theta(e_j)) must equal phi(e_j): check row d * M == d
        for (std::size_t j = 0; j < g.rank(); ++j) {
            Int lhs = 0;
            for (std::size_t i = 0; i < g.rank(); ++i)
                lhs += covector[i] * g.abelian().M.at(i, j);
            if (reduce(lhs) != reduce(covector[j])) {
                std::ostringstream os;
                os << "Functional: phi(theta(e_" << j << ")) = " << lhs << " but phi(e_" << j << ") = "
                   << covector[j];
                if (modulus != 0)
                    os << " (mod " << modulus << ")";
                throw std::invalid_argument(os.str());
            }
        }
    } else {
        // a finitely supported covector on Z^infty is compatible with both
        // theta and the shift only when it vanishes
        for (std::size_t j = 0; j < covector.size(); ++j) {
            if (reduce(covector[j]) != 0) {
                std::ostringstream os;
                os << "Functional: phi(a_" << j << ") = " << covector[j]
                   << " violates shift invariance phi(s a s^-1) = phi(a) combined with phi(theta(a)) = phi(a)";
                throw std::invalid_argument(os.str());
            }
        }
    }
    Functional f(Kind::Linear);
    f.covector_ = std::move(covector);
    f.modulus_ = std::move(modulus);
    return f;
}

WindowLattice intersect_kernel(const GroupSpec &g, const WindowLattice &B, const Functional &phi) {
    if (phi.kind() != Functional::Kind::Linear)
        return B; // chi and the s-exponent both vanish on fiber lattices
    if (B.is_zero())
        return B;
    if (g.kind() != GroupSpec::Kind::FreeAbelian) {
        // a valid wreath linear functional is identically zero on the fiber
        return B;
    }
    const auto &basis = B.L.basis();
    std::size_t n = basis.size();
    IntVector d(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < g.rank(); ++j)
            d[i] += phi.covector()[j] * basis[i][j];
    std::vector<IntVector> coeff_kernel;
    if (phi.modulus() == 0) {
        IntMatrix A(1, n);
        for (std::size_t i = 0; i < n; ++i)
            A.at(0, i) = d[i];
        coeff_kernel = integer_kernel(A);
    } else {
        IntMatrix A(1, n + 1);
        for (std::size_t i = 0; i < n; ++i)
            A.at(0, i) = d[i];
        A.at(0, n) = phi.modulus();
        for (auto &k : integer_kernel(A))
            coeff_kernel.emplace_back(k.begin(), k.begin() + n);
    }
    std::vector<IntVector> gens;
    for (auto &c : coeff_kernel) {
        IntVector v(g.rank(), 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < g.rank(); ++j)
                v[j] += c[i] * basis[i][j];
        gens.push_back(std::move(v));
    }
    return rebuild_abelian(g, std::move(gens), B.denom_exp);
}

AscensionVerdict ascension_type(const GroupSpec &g, const HnnElement &tau, const WindowLattice &B) {
    WindowLattice C = conj_lattice(g, tau, B);
    if (B.is_zero())
        return {AscensionVerdict::Kind::Equal, std::nullopt};
    LatticeCmp cmp = lattice_compare(g, C, B);
    switch (cmp.verdict) {
    case CmpVerdict::Equal:
        return {AscensionVerdict::Kind::Equal, std::nullopt};
    case CmpVerdict::FirstInSecond:
        return {AscensionVerdict::Kind::Strict, cmp.witness};
    case CmpVerdict::SecondInFirst:
    case CmpVerdict::Incomparable:
        return {AscensionVerdict::Kind::NotInvariant, cmp.witness};
    }
    throw std::logic_error("unreachable");
}

SelfEmbeddingResult self_embedding_search(const GroupSpec &g, const WindowLattice &B, long long i_lo,
                                          long long i_hi, long long j_lo, long long j_hi) {
    if (g.kind() != GroupSpec::Kind::Wreath || B.kind != GroupSpec::Kind::Wreath)
        throw std::invalid_argument("self_embedding_search: wreath base required");
    if (B.is_zero())
        return {std::nullopt, "no strict containment possible: B is the zero lattice"};
    for (long long j = j_lo; j <= j_hi; ++j) {
        WindowLattice Tj = theta_lattice(g, B, j);
        for (long long i = i_lo; i <= i_hi; ++i) {
            WindowLattice C = shift_lattice(Tj, i);
            LatticeCmp cmp = lattice_compare(g, C, B);
            if (cmp.verdict == CmpVerdict::FirstInSecond)
                return {std::make_pair(i, j), "strict self-embedding found"};
        }
    }
    return {std::nullopt, "no strict containment over the searched ranges"};
}

} // namespace solhnn
