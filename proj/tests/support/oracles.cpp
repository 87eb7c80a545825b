#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

namespace {

using Integer = mpz_class;

int permutation_parity(std::vector<unsigned>& seq)
{
    // Bubble sort, counting swaps.
    int parity = 1;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = 0; b + 1 < seq.size() - a; ++b) {
            if (seq[b] > seq[b + 1]) {
                std::swap(seq[b], seq[b + 1]);
                parity = -parity;
            }
        }
    return parity;
}

std::size_t position(const std::vector<std::vector<unsigned>>& basis, const std::vector<unsigned>& s)
{
    return static_cast<std::size_t>(std::find(basis.begin(), basis.end(), s) - basis.begin());
}

} // namespace

std::size_t rank(const Matrix& m)
{
    std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, Integer(m(i, j).get_den()));
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && a[piv][c] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]);
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

Scalar leibniz_det(const Matrix& m)
{
    const std::size_t n = m.rows();
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0u);
    Scalar total = 0;
    do {
        std::vector<unsigned> copy = p;
        Scalar term = permutation_parity(copy);
        for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

std::vector<std::vector<unsigned>> subsets(unsigned d, unsigned k)
{
    std::vector<std::vector<unsigned>> out;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
        std::vector<unsigned> s;
        for (unsigned i = 0; i < d; ++i) {
            if (mask & (1u << i)) s.push_back(i + 1);
        }
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Matrix exterior_power(const Matrix& a, unsigned k)
{
    const auto basis = subsets(static_cast<unsigned>(a.rows()), k);
    Matrix out(basis.size(), basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c) {
            Matrix minor(k, k);
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j) minor(i, j) = a(basis[r][i] - 1, basis[c][j] - 1);
            out(r, c) = k == 0 ? Scalar(1) : leibniz_det(minor);
        }
    return out;
}

Matrix ce_differential(const Representation& r, unsigned n)
{
    const auto& l = r.algebra();
    const auto d = static_cast<unsigned>(l.dim());
    const std::size_t m = r.dim();
    const auto source = subsets(d, n);
    const auto target = subsets(d, n + 1);
    Matrix out(target.size() * m, source.size() * m);

    for (std::size_t col = 0; col < source.size() * m; ++col) {
        // Basis cochain: e_{source[col / m]} ↦ unit vector col % m.
        auto eval = [&](std::vector<unsigned> tuple) {
            cedual::Vector v(m);
            std::vector<unsigned> sorted = tuple;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return v;
            const int s = permutation_parity(tuple);
            if (position(source, tuple) == col / m) v[col % m] = s;
            return v;
        };

        for (std::size_t row = 0; row < target.size(); ++row) {
            const auto& x = target[row];
            cedual::Vector total(m);
            for (unsigned i = 0; i <= n; ++i) {
                std::vector<unsigned> rest;
                for (unsigned a = 0; a <= n; ++a) {
                    if (a != i) rest.push_back(x[a]);
                }
                const cedual::Vector fx = eval(rest);
                const Matrix& act = r.action(x[i] - 1);
                const int s = i % 2 == 0 ? 1 : -1;
                for (std::size_t v = 0; v < m; ++v)
                    for (std::size_t w = 0; w < m; ++w) total[v] += s * act(v, w) * fx[w];
            }
            for (unsigned i = 0; i <= n; ++i)
                for (unsigned j = i + 1; j <= n; ++j) {
                    const cedual::Vector br = l.bracket(x[i] - 1, x[j] - 1);
                    const int s = (i + j) % 2 == 0 ? 1 : -1;
                    for (unsigned e = 0; e < d; ++e) {
                        if (br[e] == 0) continue;
                        std::vector<unsigned> tuple{e + 1};
                        for (unsigned a = 0; a <= n; ++a) {
                            if (a != i && a != j) tuple.push_back(x[a]);
                        }
                        const cedual::Vector fx = eval(tuple);
                        for (std::size_t v = 0; v < m; ++v) total[v] += s * br[e] * fx[v];
                    }
                }
            for (std::size_t v = 0; v < m; ++v) out(row * m + v, col) = total[v];
        }
    }
    return out;
}

std::vector<std::size_t> betti(const Representation& r)
{
    const auto d = static_cast<unsigned>(r.algebra().dim());
    std::vector<std::size_t> ranks;
    for (unsigned n = 0; n < d; ++n) ranks.push_back(rank(ce_differential(r, n)));
    std::vector<std::size_t> out;
    for (unsigned k = 0; k <= d; ++k) {
        const std::size_t dim = subsets(d, k).size() * r.dim();
        const std::size_t out_rank = k < d ? ranks[k] : 0;
        const std::size_t in_rank = k > 0 ? ranks[k - 1] : 0;
        out.push_back(dim - out_rank - in_rank);
    }
    return out;
}

cedual::TruncatedSeries binomial_series(const Scalar& a, unsigned N)
{
    cedual::TruncatedSeries s(N);
    Scalar c = 1;
    for (unsigned n = 1; n < N; ++n) {
        c *= (a - (n - 1)) / Scalar(n);
        s[n] = c;
    }
    return s;
}

Scalar gauss_norm(const cedual::LaurentPoly& f, const Scalar& t)
{
    Scalar best = 0;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        const Scalar& a = f.coeffs[i];
        if (a == 0) continue;
        Integer num = a.get_num(), den = a.get_den();
        long v = 0;
        while (mpz_divisible_ui_p(num.get_mpz_t(), f.p)) {
            num /= f.p;
            ++v;
        }
        while (mpz_divisible_ui_p(den.get_mpz_t(), f.p)) {
            den /= f.p;
            --v;
        }
        Scalar abs = 1;
        for (long j = 0; j < std::labs(v); ++j) abs *= Scalar(static_cast<long>(f.p));
        if (v > 0) abs = 1 / abs;
        const long e = f.lo + static_cast<long>(i);
        Scalar tp = 1;
        for (long j = 0; j < std::labs(e); ++j) tp *= t;
        if (e < 0) tp = 1 / tp;
        const Scalar term = abs * tp;
        if (term > best) best = term;
    }
    return best;
}

} // namespace oracle
