#include "symrep/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "symrep/characters.hpp"
#include "symrep/irrep.hpp"
#include "symrep/matrix.hpp"
#include "symrep/parallel.hpp"
#include "symrep/partition.hpp"
#include "symrep/permutation.hpp"
#include "symrep/representation.hpp"
#include "symrep/tableaux.hpp"

namespace symrep {
namespace suites {

namespace {

std::vector<IrrepBundle> bundles_for(int n) {
    std::vector<IrrepBundle> out;
    for (const auto& shape : partitions(n)) out.push_back(build_irrep_bundle(shape));
    return out;
}

// All sampling is drawn serially, before any parallel work, so the chosen
// workload depends only on the seed.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    return d(rng);
}

CheckResult summarize(std::string name, std::int64_t checked, std::int64_t failures,
                      const std::string& what, const std::string& first_failure) {
    CheckResult c;
    c.name = std::move(name);
    c.passed = failures == 0;
    c.detail = "checked " + std::to_string(checked) + " " + what + "; failures " +
               std::to_string(failures);
    if (!first_failure.empty()) c.detail += "; first: " + first_failure;
    return c;
}

std::string shape_tag(const Partition& shape) { return shape.to_string(); }

} // namespace

CheckResult dimension_identity(int max_n) {
    std::int64_t checked = 0, failures = 0;
    std::string first;
    for (int k = 1; k <= max_n; ++k) {
        Int sum = 0;
        for (const auto& shape : partitions(k)) {
            Int m = dimension(shape);
            sum += m * m;
        }
        ++checked;
        if (sum != factorial(k) && first.empty()) {
            ++failures;
            first = "degree " + std::to_string(k) + " sum " + sum.str();
        }
    }
    return summarize("dimension-identity", checked, failures,
                     "degrees (sum of squared dimensions vs n!)", first);
}

CheckResult g_structure(int n) {
    std::int64_t checked = 0, failures = 0;
    std::string first;
    for (const auto& b : bundles_for(n)) {
        ++checked;
        bool ok = b.g_reduced.is_lower_triangular() && b.g_reduced.has_unit_diagonal() &&
                  entries_reduced(b.g_reduced) &&
                  (b.g_reduced * b.g_reduced_inverse).is_identity() &&
                  (b.g_reduced_inverse * b.g_reduced).is_identity() &&
                  b.scale * b.dim == factorial(n) && Int(b.dim) == dimension(b.shape);
        if (!ok && first.empty()) {
            ++failures;
            first = "shape " + shape_tag(b.shape);
        } else if (!ok) {
            ++failures;
        }
    }
    return summarize("g-structure", checked, failures,
                     "shapes (triangularity, reduced entries, exact inverse, scale*dim)", first);
}

CheckResult identity_coordinates(int n) {
    std::int64_t checked = 0, failures = 0;
    std::string first;
    const Permutation e = Permutation::identity(n);
    const Int nfact = factorial(n);
    for (const auto& b : bundles_for(n)) {
        IntMatrix ye = coordinate_matrix(b, e);
        IntMatrix g = b.g_unreduced();
        bool ok = ye == b.g_reduced.transpose();
        for (int i = 0; ok && i < b.dim; ++i)
            for (int j = 0; ok && j < b.dim; ++j)
                if (nfact * ye(i, j) != Int(b.dim) * g(j, i)) ok = false;
        ++checked;
        if (!ok) {
            ++failures;
            if (first.empty()) first = "shape " + shape_tag(b.shape);
        }
    }
    return summarize("identity-coordinates", checked, failures,
                     "shapes (n! y(e)_ij = m g_ji)", first);
}

CheckResult intertwiners(int n) {
    std::int64_t checked = 0, failures = 0;
    std::string first;
    for (const auto& b : bundles_for(n)) {
        const int m = b.dim;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                Permutation s = b.sigma(i, j);
                bool ok = b.tableau(i).relabel(s) == b.tableau(j);
                if (i == j) ok = ok && s.is_identity();
                // transport: symmetrizers move across the intertwiner
                IntAlgebra sig = IntAlgebra::single(s);
                ok = ok &&
                     algebra_multiply(row_symmetrizer(b.tableau(i)), sig) ==
                         algebra_multiply(sig, row_symmetrizer(b.tableau(j))) &&
                     algebra_multiply(column_antisymmetrizer(b.tableau(i)), sig) ==
                         algebra_multiply(sig, column_antisymmetrizer(b.tableau(j)));
                for (int k = 0; ok && k < m; ++k)
                    if (compose(b.sigma(i, j), b.sigma(j, k)) != b.sigma(i, k)) ok = false;
                ++checked;
                if (!ok) {
                    ++failures;
                    if (first.empty())
                        first = "shape " + shape_tag(b.shape) + " (i,j)=(" +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                }
            }
        }
    }
    return summarize("intertwiners", checked, failures,
                     "intertwiner pairs (relabel, chain rule, transport)", first);
}

CheckResult ordering_vanishing(int n) {
    std::int64_t checked = 0, failures = 0;
    std::string first;
    for (const auto& b : bundles_for(n)) {
        const int m = b.dim;
        std::vector<IntAlgebra> rows, cols;
        for (int i = 0; i < m; ++i) {
            rows.push_back(row_symmetrizer(b.tableau(i)));
            cols.push_back(column_antisymmetrizer(b.tableau(i)));
        }
        for (int a = 0; a < m; ++a) {
            // the diagonal word never vanishes
            ++checked;
            if (algebra_multiply(rows[size_t(a)], cols[size_t(a)]).is_zero()) {
                ++failures;
                if (first.empty())
                    first = "shape " + shape_tag(b.shape) + " diagonal " + std::to_string(a + 1);
            }
            for (int c = a + 1; c < m; ++c) {
                bool ok = algebra_multiply(rows[size_t(a)], cols[size_t(c)]).is_zero() &&
                          algebra_multiply(cols[size_t(c)], rows[size_t(a)]).is_zero();
                ++checked;
                if (!ok) {
                    ++failures;
                    if (first.empty())
                        first = "shape " + shape_tag(b.shape) + " pair (" +
                                std::to_string(a + 1) + "," + std::to_string(c + 1) + ")";
                }
            }
        }
    }
    return summarize("ordering-vanishing", checked, failures,
                     "ordered words (earlier symmetrizer * later antisymmetrizer)", first);
}

CheckResult ordering_witness() {
    IrrepBundle b = build_irrep_bundle(Partition({3, 2}));
    IntAlgebra p5 = row_symmetrizer(b.tableau(4));
    IntAlgebra n1 = column_antisymmetrizer(b.tableau(0));
    IntAlgebra p1 = row_symmetrizer(b.tableau(0));
    IntAlgebra n5 = column_antisymmetrizer(b.tableau(4));
    bool survives = !algebra_multiply(p5, n1).is_zero();
    bool lemma_holds = algebra_multiply(p1, n5).is_zero() && algebra_multiply(n5, p1).is_zero();
    bool g_shape = b.g_reduced(4, 0) != 0;
    for (int r = 0; g_shape && r < 5; ++r)
        for (int c = 0; g_shape && c < 5; ++c)
            if (!(r == 4 && c == 0) && b.g_reduced(r, c) != Int(r == c ? 1 : 0)) g_shape = false;
    CheckResult out;
    out.name = "ordering-witness";
    out.passed = survives && lemma_holds && g_shape;
    out.detail = std::string("shape 3,2 of degree 5: word (later symmetrizer 5)*(earlier "
                             "antisymmetrizer 1) ") +
                 (survives ? "survives" : "vanishes") + "; ordered word (1,5) " +
                 (lemma_holds ? "vanishes" : "survives") + "; g' = identity except entry (5,1) = " +
                 b.g_reduced(4, 0).str();
    return out;
}

CheckResult factorization_unique(int n) {
    std::int64_t checked = 0, failures = 0;
    std::string first;
    for (const auto& b : bundles_for(n)) {
        const int m = b.dim;
        std::vector<size_t> colsize, rowsize;
        for (int i = 0; i < m; ++i) {
            colsize.push_back(column_antisymmetrizer(b.tableau(i)).size());
            rowsize.push_back(row_symmetrizer(b.tableau(i)).size());
        }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                IntAlgebra p = projector_expand(b, i, j);
                bool ok = p.size() == colsize[size_t(i)] * rowsize[size_t(j)];
                for (const auto& [perm, coeff] : p.terms()) {
                    (void)perm;
                    if (coeff != 1 && coeff != -1) ok = false;
                }
                ++checked;
                if (!ok) {
                    ++failures;
                    if (first.empty())
                        first = "shape " + shape_tag(b.shape) + " (i,j)=(" +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                }
            }
    }
    return summarize("factorization-unique", checked, failures,
                     "expanded projectors (term count = |cols|*|rows|, unit coefficients)",
                     first);
}

CheckResult coordinate_oracle(int n, bool exhaustive, int samples_per_shape, std::uint64_t seed,
                              int jobs) {
    const std::vector<Permutation> perms = all_permutations(n);
    std::int64_t checked = 0, failures = 0;
    std::string first;
    if (exhaustive) {
        for (const auto& b : bundles_for(n)) {
            const int m = b.dim;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    IntAlgebra p = projector_expand(b, i, j);
                    std::vector<std::uint8_t> bad(perms.size(), 0);
                    parallel_for(std::int64_t(perms.size()), jobs, [&](std::int64_t k) {
                        const Permutation& s = perms[size_t(k)];
                        if (Int(projector_coordinate(b, i, j, s)) != p.coefficient(s))
                            bad[size_t(k)] = 1;
                    });
                    checked += std::int64_t(perms.size());
                    for (size_t k = 0; k < bad.size(); ++k)
                        if (bad[k]) {
                            ++failures;
                            if (first.empty())
                                first = "shape " + shape_tag(b.shape) + " (i,j)=(" +
                                        std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        ") s=" + perms[k].to_string();
                        }
                }
        }
    } else {
        std::mt19937_64 rng(seed);
        for (const auto& b : bundles_for(n)) {
            const int m = b.dim;
            std::map<std::pair<int, int>, IntAlgebra> cache;
            for (int t = 0; t < samples_per_shape; ++t) {
                int i = int(draw(rng, 0, m - 1));
                int j = int(draw(rng, 0, m - 1));
                const Permutation& s = perms[size_t(draw(rng, 0, std::int64_t(perms.size()) - 1))];
                auto key = std::make_pair(i, j);
                auto it = cache.find(key);
                if (it == cache.end()) it = cache.emplace(key, projector_expand(b, i, j)).first;
                ++checked;
                if (Int(projector_coordinate(b, i, j, s)) != it->second.coefficient(s)) {
                    ++failures;
                    if (first.empty())
                        first = "shape " + shape_tag(b.shape) + " (i,j)=(" + std::to_string(i + 1) +
                                "," + std::to_string(j + 1) + ") s=" + s.to_string();
                }
            }
        }
    }
    return summarize("coordinate-oracle", checked, failures,
                     "coordinates vs brute-force expansion coefficients", first);
}

CheckResult projector_relations(int n, bool exhaustive, int samples_per_shape,
                                std::uint64_t seed, int jobs) {
    std::int64_t checked = 0, failures = 0;
    std::string first;
    std::mt19937_64 rng(seed);
    for (const auto& b : bundles_for(n)) {
        const int m = b.dim;
        const std::vector<IntAlgebra> exp = expand_all_projectors(b);
        auto relation_holds = [&](int i, int j, int k, int l) {
            IntAlgebra lhs = algebra_multiply(exp[size_t(i * m + j)], exp[size_t(k * m + l)]);
            IntAlgebra rhs = exp[size_t(i * m + l)] * (b.scale * b.g_reduced(j, k));
            return lhs == rhs;
        };
        if (exhaustive) {
            const std::int64_t total = std::int64_t(m) * m * m * m;
            std::vector<std::uint8_t> bad(size_t(total), 0);
            parallel_for(total, jobs, [&](std::int64_t q) {
                int l = int(q % m), k = int((q / m) % m), j = int((q / m / m) % m),
                    i = int(q / m / m / m);
                if (!relation_holds(i, j, k, l)) bad[size_t(q)] = 1;
            });
            checked += total;
            for (std::int64_t q = 0; q < total; ++q)
                if (bad[size_t(q)]) {
                    ++failures;
                    if (first.empty()) {
                        int l = int(q % m), k = int((q / m) % m), j = int((q / m / m) % m),
                            i = int(q / m / m / m);
                        first = "shape " + shape_tag(b.shape) + " (i,j,k,l)=(" +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                std::to_string(k + 1) + "," + std::to_string(l + 1) + ")";
                    }
                }
        } else {
            std::vector<std::array<int, 4>> quads;
            for (int t = 0; t < samples_per_shape; ++t)
                quads.push_back({int(draw(rng, 0, m - 1)), int(draw(rng, 0, m - 1)),
                                 int(draw(rng, 0, m - 1)), int(draw(rng, 0, m - 1))});
            std::vector<std::uint8_t> bad(quads.size(), 0);
            parallel_for(std::int64_t(quads.size()), jobs, [&](std::int64_t q) {
                const auto& a = quads[size_t(q)];
                if (!relation_holds(a[0], a[1], a[2], a[3])) bad[size_t(q)] = 1;
            });
            checked += std::int64_t(quads.size());
            for (size_t q = 0; q < quads.size(); ++q)
                if (bad[q]) {
                    ++failures;
                    if (first.empty()) {
                        const auto& a = quads[q];
                        first = "shape " + shape_tag(b.shape) + " (i,j,k,l)=(" +
                                std::to_string(a[0] + 1) + "," + std::to_string(a[1] + 1) + "," +
                                std::to_string(a[2] + 1) + "," + std::to_string(a[3] + 1) + ")";
                    }
                }
        }
    }
    return summarize("projector-relations", checked, failures,
                     "products p_ij p_kl vs scale * g'(j,k) * p_il", first);
}

CheckResult cross_partition(int n, bool exhaustive, int samples, std::uint64_t seed) {
    const std::vector<IrrepBundle> bundles = bundles_for(n);
    std::int64_t checked = 0, failures = 0;
    std::string first;
    auto check_pair = [&](size_t sa, int i, int j, size_t sb, int k, int l) {
        IntAlgebra prod = algebra_multiply(projector_expand(bundles[sa], i, j),
                                           projector_expand(bundles[sb], k, l));
        ++checked;
        if (!prod.is_zero()) {
            ++failures;
            if (first.empty())
                first = "shapes " + shape_tag(bundles[sa].shape) + " x " +
                        shape_tag(bundles[sb].shape);
        }
    };
    if (exhaustive) {
        for (size_t sa = 0; sa < bundles.size(); ++sa)
            for (size_t sb = 0; sb < bundles.size(); ++sb) {
                if (sa == sb) continue;
                for (int i = 0; i < bundles[sa].dim; ++i)
                    for (int j = 0; j < bundles[sa].dim; ++j)
                        for (int k = 0; k < bundles[sb].dim; ++k)
                            for (int l = 0; l < bundles[sb].dim; ++l) check_pair(sa, i, j, sb, k, l);
            }
    } else if (bundles.size() > 1) {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < samples; ++t) {
            size_t sa = size_t(draw(rng, 0, std::int64_t(bundles.size()) - 1));
            size_t sb = size_t(draw(rng, 0, std::int64_t(bundles.size()) - 2));
            if (sb >= sa) ++sb;
            check_pair(sa, int(draw(rng, 0, bundles[sa].dim - 1)),
                       int(draw(rng, 0, bundles[sa].dim - 1)), sb,
                       int(draw(rng, 0, bundles[sb].dim - 1)),
                       int(draw(rng, 0, bundles[sb].dim - 1)));
        }
    }
    return summarize("cross-partition-orthogonality", checked, failures,
                     "projector products across distinct shapes", first);
}

CheckResult homomorphism(int n, bool exhaustive, int pairs_per_shape, std::uint64_t seed,
                         int jobs) {
    const std::vector<Permutation> perms = all_permutations(n);
    const std::int64_t fact = std::int64_t(perms.size());
    std::int64_t checked = 0, dual_checked = 0, failures = 0;
    std::string first;
    std::mt19937_64 rng(seed);
    for (const auto& b : bundles_for(n)) {
        // permutation -> lex rank, for composing inside the pair sweep
        std::map<Permutation, std::int64_t> rank;
        for (std::int64_t k = 0; k < fact; ++k) rank.emplace(perms[size_t(k)], k);
        std::vector<IntMatrix> xs(static_cast<size_t>(fact));
        parallel_for(fact, jobs, [&](std::int64_t k) {
            xs[size_t(k)] = rep_matrix(b, perms[size_t(k)]).entries;
        });
        std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
        if (exhaustive) {
            pairs.reserve(size_t(fact * fact));
            for (std::int64_t a = 0; a < fact; ++a)
                for (std::int64_t c = 0; c < fact; ++c) pairs.emplace_back(a, c);
        } else {
            for (int t = 0; t < pairs_per_shape; ++t)
                pairs.emplace_back(draw(rng, 0, fact - 1), draw(rng, 0, fact - 1));
        }
        std::vector<std::uint8_t> bad(pairs.size(), 0);
        std::vector<std::int64_t> ab_rank(pairs.size());
        for (size_t q = 0; q < pairs.size(); ++q)
            ab_rank[q] = rank.at(
                compose(perms[size_t(pairs[q].first)], perms[size_t(pairs[q].second)]));
        parallel_for(std::int64_t(pairs.size()), jobs, [&](std::int64_t q) {
            const IntMatrix& xa = xs[size_t(pairs[size_t(q)].first)];
            const IntMatrix& xb = xs[size_t(pairs[size_t(q)].second)];
            const IntMatrix& xab = xs[size_t(ab_rank[size_t(q)])];
            if (xa * b.g_reduced * xb != xab) {
                bad[size_t(q)] = 1;
                return;
            }
            // dual law on a deterministic subset: with W = g' x' g', the
            // matrices compose with g'^-1 interspersed
            if (q % 8 == 0) {
                IntMatrix wa = b.g_reduced * xa * b.g_reduced;
                IntMatrix wb = b.g_reduced * xb * b.g_reduced;
                IntMatrix wab = b.g_reduced * xab * b.g_reduced;
                if (wa * b.g_reduced_inverse * wb != wab) bad[size_t(q)] = 2;
            }
        });
        checked += std::int64_t(pairs.size());
        dual_checked += std::int64_t((pairs.size() + 7) / 8);
        for (size_t q = 0; q < pairs.size(); ++q)
            if (bad[q]) {
                ++failures;
                if (first.empty())
                    first = std::string(bad[q] == 2 ? "dual law at " : "") + "shape " +
                            shape_tag(b.shape) + " a=" + perms[size_t(pairs[q].first)].to_string() +
                            " b=" + perms[size_t(pairs[q].second)].to_string();
            }
    }
    CheckResult c = summarize("homomorphism", checked, failures,
                              "pairs (x'(a) g' x'(b) = x'(ab))", first);
    c.detail += "; dual-law subset " + std::to_string(dual_checked);
    return c;
}

CheckResult duality_inverse(int n, bool gauss_oracle) {
    const std::vector<Permutation> perms = all_permutations(n);
    const int fact = int(perms.size());
    const std::vector<IrrepBundle> bundles = bundles_for(n);
    // basis triples in shape-major, then row-major (i,j) order
    IntMatrix y(fact, fact);
    RatMatrix x(fact, fact);
    int t0 = 0;
    for (const auto& b : bundles) {
        const int m = b.dim;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                IntAlgebra p = projector_expand(b, i, j);
                for (int a = 0; a < fact; ++a)
                    y(t0 + i * m + j, a) = p.coefficient(perms[size_t(a)]);
            }
        for (int a = 0; a < fact; ++a) {
            IntMatrix xa = rep_matrix(b, perms[size_t(a)]).entries;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) x(a, t0 + i * m + j) = Rat(xa(i, j), b.scale);
        }
        t0 += m * m;
    }
    bool complete = t0 == fact;
    RatMatrix yr = to_rational(y);
    bool xy = (x * yr).is_identity();
    bool yx = (yr * x).is_identity();
    bool gauss = true;
    if (gauss_oracle) gauss = rational_inverse(yr) == x;
    CheckResult c;
    c.name = "duality-inverse";
    c.passed = complete && xy && yx && gauss;
    c.detail = "basis size " + std::to_string(t0) + " of " + std::to_string(fact) +
               "; x*y identity: " + (xy ? "yes" : "no") + "; y*x identity: " +
               (yx ? "yes" : "no");
    if (gauss_oracle) c.detail += std::string("; gauss-jordan oracle: ") + (gauss ? "match" : "mismatch");
    return c;
}

CheckResult completeness(int n, bool exhaustive, int samples, std::uint64_t seed) {
    const std::vector<Permutation> perms = all_permutations(n);
    const std::vector<IrrepBundle> bundles = bundles_for(n);
    std::vector<std::vector<RatAlgebra>> exp;
    for (const auto& b : bundles) {
        std::vector<RatAlgebra> shape_exp;
        for (const auto& p : expand_all_projectors(b)) shape_exp.push_back(to_rational(p));
        exp.push_back(std::move(shape_exp));
    }
    std::vector<Permutation> targets;
    if (exhaustive) {
        targets = perms;
    } else {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < samples; ++t)
            targets.push_back(perms[size_t(draw(rng, 0, std::int64_t(perms.size()) - 1))]);
    }
    std::int64_t failures = 0;
    std::string first;
    for (const auto& b : targets) {
        RatAlgebra acc;
        for (size_t s = 0; s < bundles.size(); ++s) {
            const IrrepBundle& bun = bundles[s];
            IntMatrix xb = rep_matrix(bun, b).entries;
            for (int i = 0; i < bun.dim; ++i)
                for (int j = 0; j < bun.dim; ++j) {
                    if (xb(i, j) == 0) continue;
                    acc += exp[s][size_t(i * bun.dim + j)] * Rat(xb(i, j), bun.scale);
                }
        }
        if (!(acc == RatAlgebra::single(b, Rat(1)))) {
            ++failures;
            if (first.empty()) first = "b=" + b.to_string();
        }
    }
    return summarize("completeness", std::int64_t(targets.size()), failures,
                     "permutations rebuilt from scaled coordinates", first);
}

CheckResult translation_rule(int n, bool exhaustive, int pairs_per_shape, std::uint64_t seed) {
    const std::vector<Permutation> perms = all_permutations(n);
    const std::int64_t fact = std::int64_t(perms.size());
    std::int64_t checked = 0, failures = 0;
    std::string first;
    std::mt19937_64 rng(seed);
    for (const auto& b : bundles_for(n)) {
        IntMatrix ye = coordinate_matrix(b, Permutation::identity(n));
        auto rhs_factor = [&](const Permutation& p) {
            // transpose(g' x'(p)); the rule reads y(c p^-1) = y(c) * this
            return (b.g_reduced * rep_matrix(b, p).entries).transpose();
        };
        // corollary c = b: y(e) = y(b) * transpose(g' x'(b)) for every b
        std::int64_t coro = n <= 5 ? fact : 300;
        for (std::int64_t k = 0; k < coro; ++k) {
            const Permutation& p =
                n <= 5 ? perms[size_t(k)] : perms[size_t(draw(rng, 0, fact - 1))];
            ++checked;
            if (coordinate_matrix(b, p) * rhs_factor(p) != ye) {
                ++failures;
                if (first.empty())
                    first = "corollary shape " + shape_tag(b.shape) + " b=" + p.to_string();
            }
        }
        std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
        if (exhaustive) {
            for (std::int64_t i = 0; i < fact; ++i)
                for (std::int64_t j = 0; j < fact; ++j) pairs.emplace_back(i, j);
        } else {
            for (int t = 0; t < pairs_per_shape; ++t)
                pairs.emplace_back(draw(rng, 0, fact - 1), draw(rng, 0, fact - 1));
        }
        for (const auto& [bi, ci] : pairs) {
            const Permutation& pb = perms[size_t(bi)];
            const Permutation& pc = perms[size_t(ci)];
            ++checked;
            if (coordinate_matrix(b, compose(pc, inverse(pb))) !=
                coordinate_matrix(b, pc) * rhs_factor(pb)) {
                ++failures;
                if (first.empty())
                    first = "shape " + shape_tag(b.shape) + " b=" + pb.to_string() +
                            " c=" + pc.to_string();
            }
        }
    }
    return summarize("translation-rule", checked, failures,
                     "instances of y(c b^-1) = y(c) transpose(g' x'(b))", first);
}

CheckResult unit_square(int n) {
    std::int64_t checked = 0, failures = 0;
    std::string first;
    for (const auto& b : bundles_for(n)) {
        IntAlgebra v = scaled_unit(b);
        ++checked;
        if (algebra_multiply(v, v) != v * b.scale) {
            ++failures;
            if (first.empty()) first = "shape " + shape_tag(b.shape);
        }
    }
    return summarize("unit-square", checked, failures, "shapes (V*V = scale*V)", first);
}

CheckResult unit_class_constancy(int n, int jobs) {
    const std::vector<ConjugacyClass> classes = conjugacy_classes(n);
    const std::vector<IrrepBundle> bundles = bundles_for(n);
    std::vector<std::uint8_t> bad(bundles.size(), 0);
    parallel_for(std::int64_t(bundles.size()), jobs, [&](std::int64_t s) {
        const IrrepBundle& b = bundles[size_t(s)];
        IntAlgebra expect;
        for (const auto& cls : classes) {
            Int chi = murnaghan_nakayama(b.shape, cls.type);
            if (chi != 0) expect += cls.class_sum * chi;
        }
        if (!(scaled_unit(b) == expect)) bad[size_t(s)] = 1;
    });
    std::int64_t failures = 0;
    std::string first;
    for (size_t s = 0; s < bundles.size(); ++s)
        if (bad[s]) {
            ++failures;
            if (first.empty()) first = "shape " + shape_tag(bundles[s].shape);
        }
    return summarize("unit-class-constancy", std::int64_t(bundles.size()), failures,
                     "shapes (V = sum of characters times class sums)", first);
}

CheckResult unit_idempotents(int n, bool exhaustive, int targets_per_shape, std::uint64_t seed) {
    const std::vector<IrrepBundle> bundles = bundles_for(n);
    std::vector<RatAlgebra> es;
    for (const auto& b : bundles) es.push_back(unit_idempotent(b));
    std::int64_t checked = 0, failures = 0;
    std::string first;
    auto fail = [&](const std::string& what) {
        ++failures;
        if (first.empty()) first = what;
    };
    RatAlgebra total;
    for (size_t s = 0; s < es.size(); ++s) {
        total += es[s];
        ++checked;
        if (!(algebra_multiply(es[s], es[s]) == es[s]))
            fail("e*e != e at " + shape_tag(bundles[s].shape));
        for (int k = 0; k + 1 < n; ++k) {
            RatAlgebra t = RatAlgebra::single(Permutation::transposition(n, k, k + 1), Rat(1));
            ++checked;
            if (!(algebra_multiply(t, es[s]) == algebra_multiply(es[s], t)))
                fail("centrality at " + shape_tag(bundles[s].shape));
        }
        for (size_t u = s + 1; u < es.size(); ++u) {
            ++checked;
            if (!(algebra_multiply(es[s], es[u]).is_zero() &&
                  algebra_multiply(es[u], es[s]).is_zero()))
                fail("cross product " + shape_tag(bundles[s].shape) + " x " +
                     shape_tag(bundles[u].shape));
        }
    }
    ++checked;
    if (!(total == RatAlgebra::unit(n))) fail("sum of idempotents is not the identity");
    // action on projectors: identity on the own shape, zero elsewhere
    std::mt19937_64 rng(seed);
    for (size_t s = 0; s < bundles.size(); ++s) {
        std::vector<std::array<int, 3>> targets; // (shape, k, l)
        if (exhaustive) {
            for (size_t u = 0; u < bundles.size(); ++u)
                for (int k = 0; k < bundles[u].dim; ++k)
                    for (int l = 0; l < bundles[u].dim; ++l)
                        targets.push_back({int(u), k, l});
        } else {
            for (int t = 0; t < targets_per_shape; ++t) {
                size_t u = size_t(draw(rng, 0, std::int64_t(bundles.size()) - 1));
                targets.push_back({int(u), int(draw(rng, 0, bundles[u].dim - 1)),
                                   int(draw(rng, 0, bundles[u].dim - 1))});
            }
        }
        for (const auto& tg : targets) {
            const IrrepBundle& bu = bundles[size_t(tg[0])];
            RatAlgebra p = to_rational(projector_expand(bu, tg[1], tg[2]));
            RatAlgebra want = size_t(tg[0]) == s ? p : RatAlgebra();
            ++checked;
            if (!(algebra_multiply(es[s], p) == want && algebra_multiply(p, es[s]) == want))
                fail("action of " + shape_tag(bundles[s].shape) + " on " + shape_tag(bu.shape));
        }
    }
    return summarize("unit-idempotents", checked, failures,
                     "idempotent identities (square, centrality, orthogonality, action, sum)",
                     first);
}

CheckResult character_oracle(int n) {
    CharacterTable t = character_table(n);
    std::int64_t checked = 0, failures = 0;
    std::string first;
    for (size_t r = 0; r < t.shapes.size(); ++r) {
        for (size_t c = 0; c < t.classes.size(); ++c) {
            ++checked;
            if (t.values[r][c] != murnaghan_nakayama(t.shapes[r], t.classes[c].type)) {
                ++failures;
                if (first.empty())
                    first = "shape " + shape_tag(t.shapes[r]) + " class " +
                            shape_tag(t.classes[c].type);
            }
        }
        ++checked;
        if (t.values[r][0] != dimension(t.shapes[r])) {
            ++failures;
            if (first.empty()) first = "identity column at " + shape_tag(t.shapes[r]);
        }
    }
    return summarize("character-oracle", checked, failures,
                     "table entries vs Murnaghan-Nakayama", first);
}

CheckResult character_orthogonality(int n) {
    CharacterTable t = character_table(n);
    const size_t k = t.shapes.size();
    const Int nfact = factorial(n);
    std::int64_t checked = 0, failures = 0;
    std::string first;
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b) {
            Int sum = 0;
            for (size_t c = 0; c < k; ++c)
                sum += t.classes[c].size * t.values[a][c] * t.values[b][c];
            ++checked;
            if (sum != (a == b ? nfact : Int(0))) {
                ++failures;
                if (first.empty())
                    first = "rows " + shape_tag(t.shapes[a]) + "," + shape_tag(t.shapes[b]);
            }
        }
    for (size_t c = 0; c < k; ++c)
        for (size_t d = 0; d < k; ++d) {
            Int sum = 0;
            for (size_t a = 0; a < k; ++a) sum += t.values[a][c] * t.values[a][d];
            sum *= t.classes[c].size;
            ++checked;
            if (sum != (c == d ? nfact : Int(0))) {
                ++failures;
                if (first.empty())
                    first = "columns " + shape_tag(t.classes[c].type) + "," +
                            shape_tag(t.classes[d].type);
            }
        }
    return summarize("character-orthogonality", checked, failures,
                     "row and column orthogonality relations", first);
}

CheckResult character_trace(int n, bool exhaustive, int samples, std::uint64_t seed) {
    const std::vector<Permutation> perms = all_permutations(n);
    std::int64_t checked = 0, failures = 0;
    std::string first;
    std::mt19937_64 rng(seed);
    std::vector<Permutation> targets;
    if (exhaustive) {
        targets = perms;
    } else {
        for (int t = 0; t < samples; ++t)
            targets.push_back(perms[size_t(draw(rng, 0, std::int64_t(perms.size()) - 1))]);
    }
    for (const auto& b : bundles_for(n)) {
        for (const auto& p : targets) {
            IntMatrix m = conventional_matrix(b, p);
            Int tr = 0;
            for (int i = 0; i < b.dim; ++i) tr += m(i, i);
            ++checked;
            if (tr != murnaghan_nakayama(b.shape, cycle_type(p))) {
                ++failures;
                if (first.empty())
                    first = "shape " + shape_tag(b.shape) + " b=" + p.to_string();
            }
        }
    }
    return summarize("character-trace", checked, failures,
                     "traces of conventional matrices vs class characters", first);
}

namespace {

std::vector<Permutation> pick_targets(const std::vector<Permutation>& perms, bool exhaustive,
                                      int count, std::mt19937_64& rng) {
    if (exhaustive) return perms;
    std::vector<Permutation> out;
    out.reserve(size_t(count));
    for (int t = 0; t < count; ++t)
        out.push_back(perms[size_t(draw(rng, 0, std::int64_t(perms.size()) - 1))]);
    return out;
}

} // namespace

CheckResult reduced_entries(int n, bool exhaustive, int samples_per_shape, std::uint64_t seed,
                            int jobs) {
    const std::vector<Permutation> perms = all_permutations(n);
    std::int64_t checked = 0, failures = 0;
    std::string first;
    std::mt19937_64 rng(seed);
    for (const auto& b : bundles_for(n)) {
        std::vector<Permutation> targets = pick_targets(perms, exhaustive, samples_per_shape, rng);
        std::vector<std::uint8_t> bad(targets.size(), 0);
        parallel_for(std::int64_t(targets.size()), jobs, [&](std::int64_t k) {
            if (!entries_reduced(coordinate_matrix(b, targets[size_t(k)]))) bad[size_t(k)] = 1;
        });
        checked += std::int64_t(targets.size());
        for (size_t k = 0; k < targets.size(); ++k)
            if (bad[k]) {
                ++failures;
                if (first.empty())
                    first = "shape " + shape_tag(b.shape) + " b=" + targets[k].to_string();
            }
    }
    return summarize("reduced-entries", checked, failures, "coordinate matrices y(b)", first);
}

CheckResult reduced_claim_x(int n, bool exhaustive, int samples_per_shape, std::uint64_t seed,
                            int jobs) {
    const std::vector<Permutation> perms = all_permutations(n);
    std::int64_t checked = 0, failures = 0;
    std::string first, by_shape;
    std::mt19937_64 rng(seed);
    for (const auto& b : bundles_for(n)) {
        std::vector<Permutation> targets = pick_targets(perms, exhaustive, samples_per_shape, rng);
        std::vector<std::uint8_t> bad(targets.size(), 0);
        parallel_for(std::int64_t(targets.size()), jobs, [&](std::int64_t k) {
            // x'(inverse of target); sweeping all targets sweeps the group
            IntMatrix y = coordinate_matrix(b, targets[size_t(k)]);
            if (!entries_reduced(b.g_reduced_inverse * y.transpose() * b.g_reduced_inverse))
                bad[size_t(k)] = 1;
        });
        checked += std::int64_t(targets.size());
        std::int64_t shape_fail = 0;
        for (size_t k = 0; k < targets.size(); ++k)
            if (bad[k]) {
                ++failures;
                ++shape_fail;
                if (first.empty())
                    first = "shape " + shape_tag(b.shape) + " x'(b) for b=" +
                            inverse(targets[k]).to_string();
            }
        if (shape_fail > 0)
            by_shape += (by_shape.empty() ? "" : ", ") + shape_tag(b.shape) + ":" +
                        std::to_string(shape_fail);
    }
    CheckResult c;
    c.name = "reduced-claim-x";
    c.passed = failures == 0;
    c.detail = "checked " + std::to_string(checked) + " representation matrices x'(b); violations " +
               std::to_string(failures);
    if (failures > 0)
        c.detail += " (claim finding, not a build defect); by shape: " + by_shape +
                    "; first: " + first;
    return c;
}

CheckResult claim_first_nondiagonal() {
    std::string measured;
    std::string first_nondiag;
    bool low_all_diag = true;
    std::string n5;
    for (int k = 1; k <= 5; ++k) {
        int diag_count = 0, total = 0;
        for (const auto& b : bundles_for(k)) {
            bool diag = b.g_reduced.is_identity();
            ++total;
            if (diag) ++diag_count;
            if (!diag && first_nondiag.empty())
                first_nondiag = "n=" + std::to_string(k) + " shape " + shape_tag(b.shape);
            if (k <= 4 && !diag) low_all_diag = false;
            if (k == 5) n5 += (n5.empty() ? "" : ", ") + shape_tag(b.shape) +
                              (diag ? "=diagonal" : "=nondiagonal");
        }
        if (k <= 4)
            measured += (measured.empty() ? "" : "; ") + std::string("n=") + std::to_string(k) +
                        ": " + std::to_string(diag_count) + "/" + std::to_string(total) +
                        " diagonal";
    }
    CheckResult c;
    c.name = "claim-first-nondiagonal";
    c.passed = low_all_diag && first_nondiag == "n=5 shape 3,2";
    c.detail = measured + "; n=5: " + n5 + "; first non-diagonal: " +
               (first_nondiag.empty() ? "none through n=5" : first_nondiag);
    return c;
}

CheckResult claim_inverse_reduced(int max_n) {
    const int limit = std::min(max_n, 7);
    // Revalidate g' against the brute-force expansion: the identity
    // coefficient of the expanded product p_ij must equal g'(j,i).
    const auto brute = [](const IrrepBundle& b) {
        const Permutation e = Permutation::identity(b.shape.n());
        std::int64_t ok = 0;
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j)
                if (projector_expand(b, i, j).coefficient(e) == b.g_reduced(j, i)) ++ok;
        return std::to_string(ok) + "/" + std::to_string(std::int64_t(b.dim) * b.dim) +
               " coordinates";
    };
    const auto worst_entry = [](const IntMatrix& m) {
        Int w = 0;
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) {
                Int v = m(r, c);
                if (v < 0) v = -v;
                if (v > w) w = v;
            }
        return w;
    };

    bool low_ok = true;       // degrees 1..6 all reduced
    int deg7_violations = 0;
    std::string expected_note;  // measurement at degree 7, shape (3,2,2)
    std::string first;          // first violation over increasing (degree, shape order)
    std::string first_note;
    const int extended = limit >= 7 ? 8 : limit;
    for (int k = 1; k <= extended; ++k) {
        if (k == 8 && !first.empty()) break;  // extension exists only to locate a miss
        for (const auto& b : bundles_for(k)) {
            const bool bad = !entries_reduced(b.g_reduced_inverse);
            if (k == 7 && b.shape.parts() == std::vector<int>{3, 2, 2})
                expected_note = std::string(bad ? "non-reduced" : "reduced") + ", max |entry| " +
                                worst_entry(b.g_reduced_inverse).str() + ", g' brute-check " +
                                brute(b);
            if (!bad) continue;
            if (k <= 6) low_ok = false;
            if (k == 7) ++deg7_violations;
            if (first.empty()) {
                first = "n=" + std::to_string(k) + " shape " + shape_tag(b.shape);
                first_note = "max |entry| " + worst_entry(b.g_reduced_inverse).str() +
                             ", g' brute-check " + brute(b);
            }
        }
    }
    CheckResult c;
    c.name = "claim-inverse-reduced";
    if (limit >= 7) {
        c.passed = low_ok && first == "n=7 shape 3,2,2";
        c.detail = "expected first non-reduced inverse at n=7 shape 3,2,2; degrees 1-6 all "
                   "reduced: " +
                   std::string(low_ok ? "yes" : "no") +
                   "; n=7 violations: " + std::to_string(deg7_violations) +
                   "; n=7 shape 3,2,2 inverse: " + expected_note + "; first violation found: " +
                   (first.empty() ? "none through n=8" : first + " (" + first_note + ")");
        if (!c.passed) c.detail += " (claim finding, not a build defect)";
    } else {
        c.passed = first.empty();
        c.detail = "scanned n<=" + std::to_string(limit) + ": violations " +
                   std::string(first.empty() ? "none" : "first at " + first) +
                   "; degree-7 claim not scanned";
    }
    return c;
}

CheckResult dual_family(int n) {
    std::int64_t checked = 0, failures = 0;
    std::string first;
    for (const auto& b : bundles_for(n)) {
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j) {
                ++checked;
                if (!(projector_expand(b, i, j).involution() ==
                      projector_expand_dual(b, j, i))) {
                    ++failures;
                    if (first.empty())
                        first = "shape " + shape_tag(b.shape) + " (i,j)=(" +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                }
            }
    }
    return summarize("dual-family", checked, failures,
                     "involutions of projectors vs the dual family", first);
}

} // namespace suites

Report run_verify(const VerifyOptions& opt) {
    const int n = opt.n;
    const bool sample = opt.sample_level;
    const std::uint64_t seed = opt.seed;
    const int jobs = opt.jobs;
    Report r;
    r.n = n;
    r.level = sample ? "sample" : "full";
    r.seed = seed;
    auto add = [&r](CheckResult c) { r.checks.push_back(std::move(c)); };
    const int shape_count = int(partitions(n).size());

    add(suites::dimension_identity(n));
    add(suites::g_structure(n));
    add(suites::identity_coordinates(n));
    add(suites::intertwiners(n));
    add(suites::ordering_vanishing(n));
    if (n >= 5) add(suites::ordering_witness());
    add(suites::factorization_unique(n));
    if (!sample && n <= 6)
        add(suites::coordinate_oracle(n, true, 0, seed, jobs));
    else
        add(suites::coordinate_oracle(n, false, std::max(1500, 10000 / shape_count + 1), seed,
                                      jobs));
    if (!sample && n <= 5)
        add(suites::projector_relations(n, true, 0, seed, jobs));
    else
        add(suites::projector_relations(n, false, 400, seed, jobs));
    if (!sample && n <= 4)
        add(suites::cross_partition(n, true, 0, seed));
    else
        add(suites::cross_partition(n, false, 60, seed));
    if (!sample && n <= 5)
        add(suites::homomorphism(n, true, 0, seed, jobs));
    else
        add(suites::homomorphism(n, false, sample ? 600 : 2000, seed, jobs));
    add(suites::dual_family(std::min(n, 4)));
    if (n <= 5) add(suites::duality_inverse(n, n <= 4));
    if (!sample && n <= 5)
        add(suites::completeness(n, true, 0, seed));
    else
        add(suites::completeness(n, false, 12, seed));
    add(suites::translation_rule(n, !sample && n <= 4, sample ? 150 : 200, seed));
    add(suites::unit_square(n));
    add(suites::unit_class_constancy(n, jobs));
    if (n <= 5) add(suites::unit_idempotents(n, n <= 4, 10, seed));
    add(suites::character_oracle(n));
    add(suites::character_orthogonality(n));
    if (!sample && n <= 5)
        add(suites::character_trace(n, true, 0, seed));
    else
        add(suites::character_trace(n, false, 200, seed));
    if (!sample && n <= 6) {
        add(suites::reduced_entries(n, true, 0, seed, jobs));
        add(suites::reduced_claim_x(n, true, 0, seed, jobs));
    } else {
        add(suites::reduced_entries(n, false, 300, seed, jobs));
        add(suites::reduced_claim_x(n, false, 300, seed, jobs));
    }
    if (n >= 5) add(suites::claim_first_nondiagonal());
    if (n >= 6) add(suites::claim_inverse_reduced(7));
    return r;
}

Report run_claims(const ClaimsOptions& opt) {
    Report r;
    r.n = opt.max_n;
    r.level = "claims";
    r.seed = opt.seed;
    r.checks.push_back(suites::claim_first_nondiagonal());
    r.checks.push_back(suites::claim_inverse_reduced(opt.max_n));
    for (int k = 2; k <= std::min(opt.max_n, 6); ++k) {
        CheckResult y = suites::reduced_entries(k, true, 0, opt.seed, opt.jobs);
        y.name += "-n" + std::to_string(k);
        r.checks.push_back(std::move(y));
        CheckResult x = suites::reduced_claim_x(k, true, 0, opt.seed, opt.jobs);
        x.name += "-n" + std::to_string(k);
        r.checks.push_back(std::move(x));
    }
    if (opt.max_n >= 7) {
        CheckResult y =
            suites::reduced_entries(7, false, std::max(opt.samples, 1000), opt.seed, opt.jobs);
        y.name += "-n7";
        r.checks.push_back(std::move(y));
        CheckResult x =
            suites::reduced_claim_x(7, false, std::max(opt.samples, 1000), opt.seed, opt.jobs);
        x.name += "-n7";
        r.checks.push_back(std::move(x));
    }
    return r;
}

} // namespace symrep
