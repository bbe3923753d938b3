#include "nring/ideal.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace nring {

IdealPresentation neural_ideal_generators(const NeuralCode& code) {
    IdealPresentation out;
    out.n = code.n();
    for (const PseudoMonomial& pm : neural_ideal_pseudo_monomials(code))
        out.generators.push_back(expand(pm));
    return out;
}

std::vector<PseudoMonomial> neural_ideal_pseudo_monomials(const NeuralCode& code) {
    std::vector<PseudoMonomial> out;
    std::uint32_t limit = static_cast<std::uint32_t>(1u << code.n());
    for (std::uint32_t v = 0; v < limit; ++v)
        if (!code.contains(v)) out.push_back(char_poly(Codeword{v, code.n()}));
    return out;
}

bool member_I(const Polynomial& f, const NeuralCode& code) {
    if (f.n() != code.n()) throw PolyError("polynomial and code have different n");
    for (std::size_t k = 0; k < code.size(); ++k)
        if (evaluate(f, code.word(k))) return false;
    return true;
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis,
                  const MonomialOrder& order) {
    Polynomial remainder(f.n());
    Polynomial work = f;
    while (!work.is_zero()) {
        const Monomial lead = leading_monomial(work, order);
        bool divided = false;
        for (const Polynomial& g : basis) {
            if (g.is_zero()) continue;
            const Monomial& lm = leading_monomial(g, order);
            if (lm.divides(lead)) {
                work = work + g * lead.quotient(lm);
                divided = true;
                break;
            }
        }
        if (!divided) {
            remainder = remainder + Polynomial::from_monomial(lead);
            work = work + Polynomial::from_monomial(lead);
        }
    }
    return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero()) throw PolyError("s-polynomial of a zero polynomial");
    const Monomial& lf = leading_monomial(f, order);
    const Monomial& lg = leading_monomial(g, order);
    Monomial lcm = Monomial::lcm(lf, lg);
    return f * lcm.quotient(lf) + g * lcm.quotient(lg);
}

namespace {

struct Pair {
    int lcm_degree;
    std::size_t i, j;

    friend bool operator>(const Pair& a, const Pair& b) {
        if (a.lcm_degree != b.lcm_degree) return a.lcm_degree > b.lcm_degree;
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    }
};

}  // namespace

GroebnerBasis buchberger(const IdealPresentation& gens, const MonomialOrder& order,
                         const BuchbergerBudget& budget) {
    std::vector<Polynomial> g;
    for (const Polynomial& p : gens.generators)
        if (!p.is_zero()) g.push_back(p);

    std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> pairs;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial lcm = Monomial::lcm(leading_monomial(g[i], order),
                                         leading_monomial(g[j], order));
            pairs.push(Pair{lcm.degree(), i, j});
        }
    };
    for (std::size_t j = 0; j < g.size(); ++j) push_pairs(j);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        Pair pair = pairs.top();
        pairs.pop();
        if (++processed > budget.max_pairs)
            throw UndecidedError("Buchberger pair budget exceeded");

        const Monomial& li = leading_monomial(g[pair.i], order);
        const Monomial& lj = leading_monomial(g[pair.j], order);
        // coprime leading monomials: the S-polynomial reduces to zero
        if (Monomial::lcm(li, lj).degree() == li.degree() + lj.degree()) continue;

        Polynomial h = reduce(s_polynomial(g[pair.i], g[pair.j], order), g, order);
        if (h.is_zero()) continue;
        if (h.total_degree() > budget.max_degree)
            throw UndecidedError("Buchberger degree budget exceeded");
        g.push_back(std::move(h));
        push_pairs(g.size() - 1);
    }

    // minimize: drop elements whose leading monomial another one divides
    std::vector<std::size_t> by_lead(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) by_lead[k] = k;
    std::sort(by_lead.begin(), by_lead.end(), [&](std::size_t a, std::size_t b) {
        return compare(order, leading_monomial(g[a], order), leading_monomial(g[b], order)) ==
               std::strong_ordering::less;
    });
    std::vector<Polynomial> minimal;
    for (std::size_t k : by_lead) {
        const Monomial& lm = leading_monomial(g[k], order);
        bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& kept) {
            return leading_monomial(kept, order).divides(lm);
        });
        if (!redundant) minimal.push_back(g[k]);
    }

    // reduce: replace each element by its normal form modulo the others
    std::vector<Polynomial> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Polynomial> others;
        for (std::size_t l = 0; l < minimal.size(); ++l)
            if (l != k) others.push_back(minimal[l]);
        Polynomial nf = reduce(minimal[k], others, order);
        if (!nf.is_zero()) reduced.push_back(std::move(nf));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare(order, leading_monomial(a, order), leading_monomial(b, order)) ==
               std::strong_ordering::less;
    });
    return GroebnerBasis{order, std::move(reduced)};
}

bool is_groebner(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
        for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
            Polynomial s = s_polynomial(gb.basis[i], gb.basis[j], gb.order);
            if (!reduce(s, gb.basis, gb.order).is_zero()) return false;
        }
    return true;
}

bool is_reduced(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        for (std::size_t j = 0; j < gb.basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& lm = leading_monomial(gb.basis[j], gb.order);
            for (const Monomial& t : gb.basis[i].terms())
                if (lm.divides(t)) return false;
        }
    }
    return true;
}

bool member_J(const Polynomial& f, const NeuralCode& code, const MonomialOrder& order,
              const BuchbergerBudget& budget) {
    if (f.n() != code.n()) throw PolyError("polynomial and code have different n");
    GroebnerBasis gb = buchberger(neural_ideal_generators(code), order, budget);
    return reduce(f, gb.basis, order).is_zero();
}

namespace {

// Monomials of n variables with total degree <= bound, ascending.
void monomials_up_to(int n, int bound, std::vector<Monomial>& out) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    // odometer over exponent vectors with sum <= bound
    for (;;) {
        Monomial built(n);
        for (int i = 1; i <= n; ++i) built = built.with_exponent(i, exps[static_cast<std::size_t>(i - 1)]);
        out.push_back(built);
        int k = 0;
        while (k < n) {
            ++exps[static_cast<std::size_t>(k)];
            int total = 0;
            for (int e : exps) total += e;
            if (total <= bound) break;
            exps[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        if (k == n) break;
    }
    std::sort(out.begin(), out.end());
}

// GF(2) row over a fixed column set.
using Row = std::vector<std::uint64_t>;

void row_xor(Row& a, const Row& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] ^= b[k];
}

int row_leading_bit(const Row& a) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != 0) return static_cast<int>(k * 64 + static_cast<std::size_t>(std::countr_zero(a[k])));
    return -1;
}

}  // namespace

std::optional<SpanCertificate> span_certificate(const Polynomial& f,
                                                const IdealPresentation& gens, int max_degree) {
    if (f.is_zero()) return SpanCertificate{};

    // column space: monomials of degree <= max_degree plus everything in f
    std::map<Monomial, std::size_t> column;
    std::vector<Monomial> cols;
    monomials_up_to(gens.n, max_degree, cols);
    for (const Monomial& m : f.terms()) cols.push_back(m);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    for (std::size_t k = 0; k < cols.size(); ++k) column[cols[k]] = k;

    std::size_t words = (cols.size() + 63) / 64;
    auto to_row = [&](const Polynomial& p) {
        Row row(words, 0);
        for (const Monomial& m : p.terms()) {
            auto it = column.find(m);
            if (it == column.end()) return std::optional<Row>{};
            row[it->second / 64] |= std::uint64_t{1} << (it->second % 64);
        }
        return std::optional<Row>{std::move(row)};
    };

    struct Product {
        Monomial multiplier;
        std::size_t gen;
    };
    std::vector<Product> products;
    std::vector<Row> rows;
    for (std::size_t gi = 0; gi < gens.generators.size(); ++gi) {
        const Polynomial& gen = gens.generators[gi];
        if (gen.is_zero()) continue;
        int room = max_degree - gen.total_degree();
        if (room < 0) continue;
        std::vector<Monomial> multipliers;
        monomials_up_to(gens.n, room, multipliers);
        for (const Monomial& m : multipliers) {
            auto row = to_row(gen * m);
            if (!row) continue;
            products.push_back(Product{m, gi});
            rows.push_back(std::move(*row));
        }
    }

    // echelon form with tags tracking which products combine into each pivot
    std::size_t tag_words = (rows.size() + 63) / 64;
    std::vector<Row> pivot_rows;
    std::vector<Row> pivot_tags;
    std::vector<int> pivot_cols;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Row row = rows[r];
        Row tag(tag_words, 0);
        tag[r / 64] |= std::uint64_t{1} << (r % 64);
        for (std::size_t p = 0; p < pivot_rows.size(); ++p) {
            std::size_t c = static_cast<std::size_t>(pivot_cols[p]);
            if ((row[c / 64] >> (c % 64)) & 1) {
                row_xor(row, pivot_rows[p]);
                row_xor(tag, pivot_tags[p]);
            }
        }
        int lead = row_leading_bit(row);
        if (lead < 0) continue;
        pivot_rows.push_back(std::move(row));
        pivot_tags.push_back(std::move(tag));
        pivot_cols.push_back(lead);
    }

    auto target = to_row(f);
    if (!target) return std::nullopt;
    Row residual = std::move(*target);
    Row combination(tag_words, 0);
    for (std::size_t p = 0; p < pivot_rows.size(); ++p) {
        std::size_t c = static_cast<std::size_t>(pivot_cols[p]);
        if ((residual[c / 64] >> (c % 64)) & 1) {
            row_xor(residual, pivot_rows[p]);
            row_xor(combination, pivot_tags[p]);
        }
    }
    if (row_leading_bit(residual) >= 0) return std::nullopt;

    SpanCertificate cert;
    for (std::size_t r = 0; r < products.size(); ++r)
        if ((combination[r / 64] >> (r % 64)) & 1)
            cert.parts.emplace_back(products[r].multiplier, products[r].gen);
    return cert;
}

Polynomial expand_certificate(const SpanCertificate& cert, const IdealPresentation& gens) {
    Polynomial acc(gens.n);
    for (const auto& [multiplier, gen_index] : cert.parts)
        acc = acc + gens.generators.at(gen_index) * multiplier;
    return acc;
}

bool MembershipOracle::in_J(const Polynomial& f, const NeuralCode& code) const {
    const GroebnerBasis& gb = groebner(code);
    bool real = reduce(f, gb.basis, order_).is_zero();
    return negate_j_ ? !real : real;
}

bool MembershipOracle::in_I(const Polynomial& f, const NeuralCode& code) const {
    bool real = member_I(f, code);
    return negate_i_ ? !real : real;
}

const GroebnerBasis& MembershipOracle::groebner(const NeuralCode& code) const {
    CacheKey key{code.n(), code.words()};
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    GroebnerBasis gb = buchberger(neural_ideal_generators(code), order_, budget_);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(std::move(key), std::move(gb)).first->second;
}

}  // namespace nring
