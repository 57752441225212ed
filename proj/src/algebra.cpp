#include "ccc/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ccc {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<int, int> prime_power(int q) {
    if (q < 2) return {0, 0};
    for (int p = 2; p <= q; ++p)
        if (q % p == 0) {
            int k = 0, x = q;
            while (x % p == 0) x /= p, ++k;
            return x == 1 ? std::make_pair(p, k) : std::make_pair(0, 0);
        }
    return {0, 0};
}

namespace {

// polynomials over GF(p), low degree first
using Poly = std::vector<int>;

Poly decode(int a, int p, int k) {
    Poly c(k);
    for (int i = 0; i < k; ++i) c[i] = a % p, a /= p;
    return c;
}

int encode(const Poly& c, int p) {
    int a = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) a = a * p + c[i];
    return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
    int k = static_cast<int>(m.size()) - 1;
    Poly r(2 * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    for (int i = 2 * k - 1; i >= k; --i) {
        int c = r[i];
        if (!c) continue;
        for (int j = 0; j <= k; ++j) r[i - k + j] = ((r[i - k + j] - c * m[j]) % p + p) % p;
    }
    r.resize(k);
    return r;
}

bool has_root_or_factor(const Poly& m, int p) {
    // m monic of degree k is irreducible iff it has no monic factor of degree 1..k/2
    int k = static_cast<int>(m.size()) - 1;
    for (int deg = 1; deg <= k / 2; ++deg) {
        int count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (int code = 0; code < count; ++code) {
            Poly f = decode(code, p, deg);
            f.push_back(1);
            // remainder of m divided by f
            Poly r = m;
            for (int i = k; i >= deg; --i) {
                int c = r[i];
                if (!c) continue;
                for (int j = 0; j <= deg; ++j) r[i - deg + j] = ((r[i - deg + j] - c * f[j]) % p + p) % p;
            }
            bool zero = true;
            for (int i = 0; i < deg; ++i) zero = zero && r[i] == 0;
            if (zero) return true;
        }
    }
    return false;
}

}  // namespace

int FiniteField::mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q - 1)];
}

int FiniteField::inv(int a) const {
    if (a == 0) throw Error("zero has no inverse");
    return exp_[(q - 1 - log_[a]) % (q - 1)];
}

int FiniteField::pow(int a, long long e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    long long m = q - 1;
    long long x = ((e % m) + m) % m;
    return exp_[(log_[a] * x) % m];
}

int FiniteField::order(int a) const {
    if (a == 0) throw Error("zero has no multiplicative order");
    int l = log_[a], m = q - 1;
    int g = l == 0 ? m : std::gcd(l, m);
    return m / g;
}

FiniteField make_field(int q) {
    auto [p, k] = prime_power(q);
    if (!p) throw Error("not a prime power: " + std::to_string(q));
    FiniteField f;
    f.p = p, f.k = k, f.q = q;
    if (k > 1) {
        // smallest monic irreducible in code order of the lower coefficients
        for (int code = 0;; ++code) {
            Poly m = decode(code, p, k);
            m.push_back(1);
            if (m[0] != 0 && !has_root_or_factor(m, p)) {
                f.modulus = m;
                break;
            }
        }
    }
    f.add_.resize(q * q);
    f.neg_.resize(q);
    for (int a = 0; a < q; ++a) {
        Poly pa = decode(a, p, k);
        Poly pn(k);
        for (int i = 0; i < k; ++i) pn[i] = (p - pa[i]) % p;
        f.neg_[a] = encode(pn, p);
        for (int b = 0; b < q; ++b) {
            Poly pb = decode(b, p, k), s(k);
            for (int i = 0; i < k; ++i) s[i] = (pa[i] + pb[i]) % p;
            f.add_[a * q + b] = encode(s, p);
        }
    }
    auto slow_mul = [&](int a, int b) {
        if (k == 1) return static_cast<int>((1LL * a * b) % p);
        return encode(mulmod(decode(a, p, k), decode(b, p, k), f.modulus, p), p);
    };
    for (int g = 1; g < q; ++g) {
        std::vector<int> ex;
        int x = 1;
        do {
            ex.push_back(x);
            x = slow_mul(x, g);
        } while (x != 1 && static_cast<int>(ex.size()) < q);
        if (static_cast<int>(ex.size()) == q - 1) {
            f.gen_ = g;
            f.exp_ = ex;
            f.log_.assign(q, 0);
            for (int i = 0; i < q - 1; ++i) f.log_[ex[i]] = i;
            break;
        }
    }
    if (q == 2) {
        f.gen_ = 1, f.exp_ = {1}, f.log_ = {0, 0};
    }
    if (!f.gen_) throw Error("no generator found");
    // spot-check distributivity on a sample
    for (int a = 0; a < q; a += std::max(1, q / 7))
        for (int b = 0; b < q; b += std::max(1, q / 5))
            for (int c = 0; c < q; c += std::max(1, q / 3))
                if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)) || f.mul(a, b) != slow_mul(a, b))
                    throw Error("field axioms failed");
    return f;
}

std::vector<int> quadratic_residues(const FiniteField& f) {
    if (f.p == 2) throw Error("quadratic residues need odd characteristic");
    std::set<int> s;
    for (int a = 1; a < f.q; ++a) s.insert(f.mul(a, a));
    return {s.begin(), s.end()};
}

LatinSquare LatinSquare::cyclic(int m) {
    LatinSquare L{m, std::vector<int>(m * m)};
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) L.cells[r * m + c] = (r + c) % m;
    return L;
}

bool LatinSquare::valid() const {
    for (int r = 0; r < m; ++r) {
        std::vector<char> row(m, 0), col(m, 0);
        for (int c = 0; c < m; ++c) {
            int a = at(r, c), b = at(c, r);
            if (a < 0 || a >= m || b < 0 || b >= m || row[a]++ || col[b]++) return false;
        }
    }
    return true;
}

BlockDesign td_from_latin(const LatinSquare& L) {
    if (!L.valid()) throw Error("not a Latin square");
    int m = L.m;
    BlockDesign b;
    b.partition = GroupPartition::uniform(3 * m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) b.blocks.push_back({r, m + c, 2 * m + L.at(r, c)});
    b.K = {3};
    return b;
}

BlockDesign td_from_field(int k, int q) {
    if (k < 2) throw Error("TD needs k >= 2");
    if (k > q + 1) throw Error("TD(k,q) from a field needs k <= q+1");
    FiniteField f = make_field(q);
    BlockDesign b;
    b.partition = GroupPartition::uniform(k * q, q);
    int cols = std::min(k, q);
    for (int a = 0; a < q; ++a)
        for (int s = 0; s < q; ++s) {
            std::vector<int> blk;
            for (int i = 0; i < cols; ++i) blk.push_back(i * q + f.add(a, f.mul(s, i)));
            if (k == q + 1) blk.push_back(q * q + s);
            b.blocks.push_back(std::move(blk));
        }
    b.K = {k};
    return b;
}

std::vector<std::pair<int, int>> td_coordinates(const BlockDesign& td) {
    std::vector<std::pair<int, int>> c(td.n(), {-1, -1});
    for (std::size_t g = 0; g < td.partition.groups.size(); ++g) {
        auto grp = td.partition.groups[g];
        std::sort(grp.begin(), grp.end());
        for (std::size_t i = 0; i < grp.size(); ++i) c[grp[i]] = {static_cast<int>(g), static_cast<int>(i)};
    }
    return c;
}

BlockDesign td_product(const BlockDesign& a, const BlockDesign& b) {
    int k = static_cast<int>(a.partition.groups.size());
    if (k != static_cast<int>(b.partition.groups.size())) throw Error("td_product needs equal k");
    int m = static_cast<int>(a.partition.groups[0].size()), n = static_cast<int>(b.partition.groups[0].size());
    auto ca = td_coordinates(a), cb = td_coordinates(b);
    BlockDesign r;
    r.partition = GroupPartition::uniform(k * m * n, m * n);
    for (const auto& A : a.blocks)
        for (const auto& B : b.blocks) {
            if (static_cast<int>(A.size()) != k || static_cast<int>(B.size()) != k) throw Error("td_product needs transversal blocks");
            std::vector<int> x(k), y(k);
            for (int p : A) x[ca[p].first] = ca[p].second;
            for (int p : B) y[cb[p].first] = cb[p].second;
            std::vector<int> blk;
            for (int i = 0; i < k; ++i) blk.push_back(i * m * n + x[i] * n + y[i]);
            r.blocks.push_back(std::move(blk));
        }
    r.K = {k};
    return r;
}

BlockDesign delete_points(const BlockDesign& b, const std::vector<int>& points, int min_keep) {
    std::vector<char> gone(b.n(), 0);
    for (int x : points) gone.at(x) = 1;
    std::vector<int> map(b.n(), -1);
    int next = 0;
    for (int x = 0; x < b.n(); ++x)
        if (!gone[x]) map[x] = next++;
    BlockDesign r;
    r.partition.n = next;
    for (const auto& g : b.partition.groups) {
        std::vector<int> h;
        for (int x : g)
            if (!gone[x]) h.push_back(map[x]);
        if (!h.empty()) r.partition.groups.push_back(std::move(h));
    }
    for (const auto& blk : b.blocks) {
        std::vector<int> nb;
        for (int x : blk)
            if (!gone[x]) nb.push_back(map[x]);
        if (static_cast<int>(nb.size()) > min_keep) r.blocks.push_back(std::move(nb));
    }
    for (auto [sz, c] : r.census()) r.K.push_back(sz);
    return r;
}

BlockDesign truncate_groups(const BlockDesign& td, int keep, const std::vector<int>& sizes) {
    int groups = static_cast<int>(td.partition.groups.size());
    if (keep + static_cast<int>(sizes.size()) != groups) throw Error("truncate_groups: keep + s must equal k");
    int m = static_cast<int>(td.partition.groups[0].size());
    std::vector<int> drop;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 0 || sizes[i] > m) throw Error("truncate_groups: size out of range");
        auto g = td.partition.groups[keep + i];
        std::sort(g.begin(), g.end());
        drop.insert(drop.end(), g.begin() + sizes[i], g.end());
    }
    BlockDesign r = delete_points(td, drop, 1);
    r.K.clear();
    for (int s = keep; s <= groups; ++s) r.K.push_back(s);
    return r;
}

BlockDesign truncate_block(const BlockDesign& td, int s, int block_index) {
    const auto& blk = td.blocks.at(block_index);
    if (s < 0 || s > static_cast<int>(blk.size())) throw Error("truncate_block: s out of range");
    auto gof = td.partition.group_of();
    std::vector<int> pts = blk;
    std::sort(pts.begin(), pts.end(), [&](int x, int y) { return gof[x] < gof[y]; });
    pts.resize(s);
    return delete_points(td, pts, 1);
}

BlockDesign remove_block_and_points(const BlockDesign& td, int block_index, const std::vector<int>& drop) {
    const auto blk = td.blocks.at(block_index);
    for (int x : drop)
        if (std::find(blk.begin(), blk.end(), x) == blk.end()) throw Error("dropped point not in the chosen block");
    BlockDesign t = td;
    t.blocks.erase(t.blocks.begin() + block_index);
    return delete_points(t, drop, 1);
}

}  // namespace ccc
