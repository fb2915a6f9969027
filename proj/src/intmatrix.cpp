#include "weylkit/intmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace weylkit {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw domain_error("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Int(rows[i][j]);
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Int> IntMatrix::col(std::size_t c) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
    std::vector<Int> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

namespace {

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void negate_col(IntMatrix& m, std::size_t c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, c) = -m.at(i, c);
}

// col[dst] += k * col[src]
void addmul_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& k) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += k * m.at(i, src);
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
    // Rational Gaussian elimination; rank over Q equals lattice rank.
    std::size_t r = m.rows(), c = m.cols();
    std::vector<std::vector<Rat>> w(r, std::vector<Rat>(c));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) w[i][j] = Rat(m.at(i, j));
    std::size_t rk = 0;
    for (std::size_t j = 0; j < c && rk < r; ++j) {
        std::size_t piv = rk;
        while (piv < r && w[piv][j].is_zero()) ++piv;
        if (piv == r) continue;
        std::swap(w[piv], w[rk]);
        for (std::size_t i = rk + 1; i < r; ++i) {
            if (w[i][j].is_zero()) continue;
            Rat f = w[i][j] / w[rk][j];
            for (std::size_t k = j; k < c; ++k) w[i][k] -= f * w[rk][k];
        }
        ++rk;
    }
    return rk;
}

IntMatrix hermite_rows(const IntMatrix& m) {
    std::size_t r = m.rows(), c = m.cols();
    IntMatrix h = m;
    std::size_t piv_row = 0;
    for (std::size_t j = 0; j < c && piv_row < r; ++j) {
        // Euclidean sweep on rows piv_row.. in column j.
        while (true) {
            std::size_t best = r;
            for (std::size_t i = piv_row; i < r; ++i) {
                if (h.at(i, j) == 0) continue;
                if (best == r || cmp(abs(h.at(i, j)), abs(h.at(best, j))) < 0) best = i;
            }
            if (best == r) break;  // column clear below
            for (std::size_t i = piv_row; i < r; ++i) {
                if (i == best || h.at(i, j) == 0) continue;
                Int q = h.at(i, j) / h.at(best, j);  // truncated division
                for (std::size_t k = 0; k < c; ++k) h.at(i, k) -= q * h.at(best, k);
            }
            bool clear = true;
            for (std::size_t i = piv_row; i < r; ++i)
                if (i != best && h.at(i, j) != 0) clear = false;
            if (clear) {
                for (std::size_t k = 0; k < c; ++k) std::swap(h.at(best, k), h.at(piv_row, k));
                break;
            }
        }
        if (h.at(piv_row, j) == 0) continue;
        if (h.at(piv_row, j) < 0)
            for (std::size_t k = 0; k < c; ++k) h.at(piv_row, k) = -h.at(piv_row, k);
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < piv_row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(piv_row, j).get_mpz_t());
            if (q != 0)
                for (std::size_t k = 0; k < c; ++k) h.at(i, k) -= q * h.at(piv_row, k);
        }
        ++piv_row;
    }
    return h;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    std::size_t r = m.rows(), c = m.cols();
    IntMatrix work = m;
    IntMatrix u = IntMatrix::identity(c);
    std::size_t piv = 0;  // next pivot column slot
    for (std::size_t row = 0; row < r && piv < c; ++row) {
        while (true) {
            std::size_t best = c;
            for (std::size_t j = piv; j < c; ++j) {
                if (work.at(row, j) == 0) continue;
                if (best == c || cmp(abs(work.at(row, j)), abs(work.at(row, best))) < 0) best = j;
            }
            if (best == c) break;
            bool clear = true;
            for (std::size_t j = piv; j < c; ++j) {
                if (j == best || work.at(row, j) == 0) continue;
                Int q = work.at(row, j) / work.at(row, best);
                addmul_col(work, j, best, -q);
                addmul_col(u, j, best, -q);
                if (work.at(row, j) != 0) clear = false;
            }
            if (clear) {
                if (best != piv) {
                    swap_cols(work, best, piv);
                    swap_cols(u, best, piv);
                }
                if (work.at(row, piv) < 0) {
                    negate_col(work, piv);
                    negate_col(u, piv);
                }
                ++piv;
                break;
            }
        }
    }
    // Columns piv..c-1 of `work` are now zero on all processed rows; since
    // every row was processed they are zero columns, and the matching columns
    // of the unimodular u are a basis of the full kernel lattice.
    std::size_t k = c - piv;
    IntMatrix basis(c, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < c; ++i) basis.at(i, j) = u.at(i, piv + j);

    // Canonicalize: column HNF = transpose of the row HNF of the transpose.
    IntMatrix t(k, c);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < k; ++j) t.at(j, i) = basis.at(i, j);
    IntMatrix h = hermite_rows(t);
    IntMatrix out(c, k);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < k; ++j) out.at(i, j) = h.at(j, i);
    return out;
}

std::vector<Int> smith_invariants(const IntMatrix& m) {
    IntMatrix w = m;
    std::size_t r = w.rows(), c = w.cols();
    std::size_t t = 0;
    auto nonzero_exists = [&](std::size_t from) {
        for (std::size_t i = from; i < r; ++i)
            for (std::size_t j = from; j < c; ++j)
                if (w.at(i, j) != 0) return true;
        return false;
    };
    while (t < r && t < c && nonzero_exists(t)) {
        // Move a minimal-modulus nonzero entry to (t, t).
        std::size_t bi = t, bj = t;
        bool found = false;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                if (w.at(i, j) == 0) continue;
                if (!found || cmp(abs(w.at(i, j)), abs(w.at(bi, bj))) < 0) {
                    bi = i; bj = j; found = true;
                }
            }
        for (std::size_t k = 0; k < c; ++k) std::swap(w.at(t, k), w.at(bi, k));
        for (std::size_t i = 0; i < r; ++i) std::swap(w.at(i, t), w.at(i, bj));
        bool dirty = false;
        for (std::size_t i = t + 1; i < r; ++i) {
            if (w.at(i, t) == 0) continue;
            Int q = w.at(i, t) / w.at(t, t);
            for (std::size_t k = 0; k < c; ++k) w.at(i, k) -= q * w.at(t, k);
            if (w.at(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < c; ++j) {
            if (w.at(t, j) == 0) continue;
            Int q = w.at(t, j) / w.at(t, t);
            for (std::size_t i = 0; i < r; ++i) w.at(i, j) -= q * w.at(i, t);
            if (w.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;  // smaller remainders appeared; repeat the sweep
        // Divisibility: w(t,t) must divide every remaining entry.
        bool divides_all = true;
        for (std::size_t i = t + 1; i < r && divides_all; ++i)
            for (std::size_t j = t + 1; j < c && divides_all; ++j)
                if (w.at(i, j) % w.at(t, t) != 0) {
                    for (std::size_t k = 0; k < c; ++k) w.at(t, k) += w.at(i, k);
                    divides_all = false;
                }
        if (!divides_all) continue;
        if (w.at(t, t) < 0)
            for (std::size_t k = 0; k < c; ++k) w.at(t, k) = -w.at(t, k);
        ++t;
    }
    std::vector<Int> inv;
    for (std::size_t i = 0; i < t; ++i) inv.push_back(w.at(i, i));
    return inv;
}

std::vector<Rat> solve_rational(const IntMatrix& m, const std::vector<Rat>& rhs) {
    std::size_t r = m.rows(), c = m.cols();
    if (rhs.size() != r) throw domain_error("rhs length mismatch");
    std::vector<std::vector<Rat>> w(r, std::vector<Rat>(c + 1));
    std::vector<std::size_t> origin(r);
    for (std::size_t i = 0; i < r; ++i) {
        origin[i] = i;
        for (std::size_t j = 0; j < c; ++j) w[i][j] = Rat(m.at(i, j));
        w[i][c] = rhs[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t piv_row = 0;
    for (std::size_t j = 0; j < c && piv_row < r; ++j) {
        std::size_t p = piv_row;
        while (p < r && w[p][j].is_zero()) ++p;
        if (p == r) continue;
        std::swap(w[p], w[piv_row]);
        std::swap(origin[p], origin[piv_row]);
        for (std::size_t i = piv_row + 1; i < r; ++i) {
            if (w[i][j].is_zero()) continue;
            Rat f = w[i][j] / w[piv_row][j];
            for (std::size_t k = j; k <= c; ++k) w[i][k] -= f * w[piv_row][k];
        }
        pivot_col.push_back(j);
        ++piv_row;
    }
    for (std::size_t i = piv_row; i < r; ++i)
        if (!w[i][c].is_zero())
            throw domain_error("inconsistent linear system at row " +
                               std::to_string(origin[i]));
    std::vector<Rat> x(c, Rat(0));  // free variables stay zero
    for (std::size_t i = pivot_col.size(); i-- > 0;) {
        std::size_t j = pivot_col[i];
        Rat acc = w[i][c];
        for (std::size_t k = j + 1; k < c; ++k) acc -= w[i][k] * x[k];
        x[j] = acc / w[i][j];
    }
    return x;
}

std::vector<Rat> mat_apply(const IntMatrix& m, const std::vector<Rat>& v) {
    if (v.size() != m.cols()) throw domain_error("vector length mismatch");
    std::vector<Rat> r(m.rows(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += Rat(m.at(i, j)) * v[j];
    return r;
}

std::vector<Rat> parse_rat_csv(std::string_view s) {
    std::vector<Rat> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string_view tok = s.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos);
        std::size_t b = 0, e = tok.size();
        while (b < e && tok[b] == ' ') ++b;
        while (e > b && tok[e - 1] == ' ') --e;
        auto r = Rat::parse(tok.substr(b, e - b));
        if (!r) throw parse_error("bad rational '" + std::string(tok) + "'");
        out.push_back(*r);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace weylkit
