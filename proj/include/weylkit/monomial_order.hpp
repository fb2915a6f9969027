#pragma once

#include <string>
#include <vector>

#include "weylkit/multiindex.hpp"
#include "weylkit/rational.hpp"

namespace weylkit {

// Total multiplicative well-order on exponent vectors.
//
// Kinds:
//   lex               plain lexicographic, x1 > x2 > ...
//   degrevlex         total degree, ties by reverse lexicographic
//   weighted          weighted degree, ties by degrevlex; used for the order
//                     filtration (weight 0 on position variables, 1 on
//                     derivative variables)
//   block_elim        first `block` variables dominate (eliminated), each
//                     block compared by degrevlex
class MonomialOrder {
public:
    enum class Kind { lex, degrevlex, weighted, block_elim };

    static MonomialOrder lex_order() { return MonomialOrder(Kind::lex); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex); }
    static MonomialOrder weighted(std::vector<long> w) {
        MonomialOrder o(Kind::weighted);
        o.weights_ = std::move(w);
        return o;
    }
    static MonomialOrder block_elim(std::size_t block) {
        MonomialOrder o(Kind::block_elim);
        o.block_ = block;
        return o;
    }

    Kind kind() const { return kind_; }
    const std::vector<long>& weights() const { return weights_; }
    std::size_t block() const { return block_; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.weights_ == b.weights_ && a.block_ == b.block_;
    }

    // strict a < b
    bool less(const MultiIndex& a, const MultiIndex& b) const {
        switch (kind_) {
            case Kind::lex: {
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (a[i] != b[i]) return a[i] < b[i];
                return false;
            }
            case Kind::degrevlex:
                return drl_less(a, b, 0, a.size());
            case Kind::weighted: {
                long wa = 0, wb = 0;
                for (std::size_t i = 0; i < a.size(); ++i) {
                    long w = i < weights_.size() ? weights_[i] : 0;
                    wa += w * a[i];
                    wb += w * b[i];
                }
                if (wa != wb) return wa < wb;
                return drl_less(a, b, 0, a.size());
            }
            case Kind::block_elim: {
                std::size_t k = block_ < a.size() ? block_ : a.size();
                if (drl_less(a, b, 0, k)) return true;
                if (drl_less(b, a, 0, k)) return false;
                return drl_less(a, b, k, a.size());
            }
        }
        return false;
    }

    bool greater(const MultiIndex& a, const MultiIndex& b) const { return less(b, a); }
    bool equal_rank(const MultiIndex& a, const MultiIndex& b) const {
        return !less(a, b) && !less(b, a);
    }

    std::string name() const {
        switch (kind_) {
            case Kind::lex: return "lex";
            case Kind::degrevlex: return "degrevlex";
            case Kind::weighted: return "weighted";
            case Kind::block_elim: return "block_elim";
        }
        return "?";
    }

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    static bool drl_less(const MultiIndex& a, const MultiIndex& b,
                         std::size_t lo, std::size_t hi) {
        int da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db;
        for (std::size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }

    Kind kind_;
    std::vector<long> weights_;
    std::size_t block_ = 0;
};

}  // namespace weylkit
