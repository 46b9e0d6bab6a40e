#include "chains.hpp"

#include "error.hpp"

namespace rf {

long long tuple_count(int q, int degree) {
    long long c = 1;
    for (int i = 0; i < degree; ++i) {
        c *= q;
        if (c > (1LL << 40)) throw Error(ErrCode::TooLarge, "tuple space too large");
    }
    return c;
}

long long tuple_index(const std::vector<int>& t, int q) {
    long long idx = 0;
    for (int x : t) idx = idx * q + x;
    return idx;
}

std::vector<int> tuple_decode(long long idx, int q, int degree) {
    std::vector<int> t(degree);
    for (int i = degree - 1; i >= 0; --i) {
        t[i] = (int)(idx % q);
        idx /= q;
    }
    return t;
}

void FormalChain::add(const std::vector<int>& t, const Int& c) {
    if (c == 0) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
        terms.emplace(t, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

FormalChain rack_boundary(const FormalChain& c, const Quandle& Q) {
    FormalChain out;
    out.degree = c.degree > 0 ? c.degree - 1 : 0;
    if (c.degree == 0) return out;
    const int n = c.degree;
    for (const auto& [t, coef] : c.terms) {
        for (int i = 1; i <= n; ++i) {
            const int sign = (i % 2 == 0) ? 1 : -1;
            std::vector<int> dropped;
            dropped.reserve(n - 1);
            for (int k = 0; k < n; ++k)
                if (k != i - 1) dropped.push_back(t[k]);
            out.add(dropped, sign * coef);
            std::vector<int> acted;
            acted.reserve(n - 1);
            for (int k = 0; k < i - 1; ++k) acted.push_back(Q.op(t[k], t[i - 1]));
            for (int k = i; k < n; ++k) acted.push_back(t[k]);
            out.add(acted, -sign * coef);
        }
    }
    return out;
}

SparseMat boundary_matrix_sparse(const Quandle& Q, int n) {
    if (n < 1) throw Error(ErrCode::Invalid, "boundary matrix needs degree >= 1");
    const int q = Q.n;
    const long long rows = tuple_count(q, n - 1);
    const long long cols = tuple_count(q, n);
    if (rows > (1 << 24) || cols > (1 << 24)) throw Error(ErrCode::TooLarge, "boundary matrix too large");
    SparseMat M((int)rows, (int)cols);
    std::vector<int> t(n);
    for (long long col = 0; col < cols; ++col) {
        // decode incrementally is not worth it at these sizes
        t = tuple_decode(col, q, n);
        for (int i = 1; i <= n; ++i) {
            const int sign = (i % 2 == 0) ? 1 : -1;
            long long r_drop = 0, r_act = 0;
            for (int k = 0; k < n; ++k)
                if (k != i - 1) r_drop = r_drop * q + t[k];
            for (int k = 0; k < i - 1; ++k) r_act = r_act * q + Q.op(t[k], t[i - 1]);
            for (int k = i; k < n; ++k) r_act = r_act * q + t[k];
            M.add((int)r_drop, (int)col, sign);
            M.add((int)r_act, (int)col, -sign);
        }
    }
    return M;
}

IntMatrix boundary_matrix(const Quandle& Q, int n) { return boundary_matrix_sparse(Q, n).to_dense(); }

bool RationalCochain::is_zero() const {
    for (const Rat& v : values)
        if (v != 0) return false;
    return true;
}

RationalCochain cochain_add(const RationalCochain& a, const RationalCochain& b) {
    if (a.degree != b.degree || a.q != b.q) throw Error(ErrCode::Invalid, "cochain shape mismatch");
    RationalCochain out = a;
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

RationalCochain cochain_sub(const RationalCochain& a, const RationalCochain& b) {
    if (a.degree != b.degree || a.q != b.q) throw Error(ErrCode::Invalid, "cochain shape mismatch");
    RationalCochain out = a;
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
    return out;
}

RationalCochain cochain_scale(const RationalCochain& a, const Rat& s) {
    RationalCochain out = a;
    for (Rat& v : out.values) v *= s;
    return out;
}

RationalCochain coboundary(const RationalCochain& f, const Quandle& Q) {
    const int n = f.degree;
    const int q = Q.n;
    RationalCochain out(n + 1, q);
    const long long cols = tuple_count(q, n + 1);
    for (long long idx = 0; idx < cols; ++idx) {
        std::vector<int> t = tuple_decode(idx, q, n + 1);
        Rat acc = 0;
        for (int i = 1; i <= n + 1; ++i) {
            const int sign = (i % 2 == 0) ? 1 : -1;
            long long r_drop = 0, r_act = 0;
            for (int k = 0; k < n + 1; ++k)
                if (k != i - 1) r_drop = r_drop * q + t[k];
            for (int k = 0; k < i - 1; ++k) r_act = r_act * q + Q.op(t[k], t[i - 1]);
            for (int k = i; k < n + 1; ++k) r_act = r_act * q + t[k];
            acc += sign * (f.at(r_drop) - f.at(r_act));
        }
        out.at(idx) = acc;
    }
    return out;
}

bool is_rack_cocycle(const RationalCochain& f, const Quandle& Q) { return coboundary(f, Q).is_zero(); }

bool is_rack_cocycle_mod(const RationalCochain& f, const Quandle& Q, const Int& k) {
    if (k < 1) throw Error(ErrCode::OutOfRange, "modulus must be >= 1", {static_cast<long>(k)});
    const RationalCochain df = coboundary(f, Q);
    for (const Rat& v : df.values) {
        if (denominator(v) != 1) return false;
        if (numerator(v) % k != 0) return false;
    }
    return true;
}

}  // namespace rf
