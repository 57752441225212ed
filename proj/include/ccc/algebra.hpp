#pragma once

#include <vector>

#include "ccc/core.hpp"

namespace ccc {

bool is_prime(long long n);
// returns {p, k} with q = p^k, or {0, 0}
std::pair<int, int> prime_power(int q);

class FiniteField {
public:
    int p = 0, k = 0, q = 0;
    std::vector<int> modulus;  // monic, low degree first, size k+1 (empty for prime fields)

    int add(int a, int b) const { return add_[a * q + b]; }
    int sub(int a, int b) const { return add_[a * q + neg_[b]]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const;
    int inv(int a) const;
    int pow(int a, long long e) const;
    int order(int a) const;  // multiplicative order; a != 0
    int generator() const { return gen_; }
    bool is_generator(int a) const { return a != 0 && order(a) == q - 1; }

    friend FiniteField make_field(int q);

private:
    std::vector<int> add_, neg_, log_, exp_;
    int gen_ = 0;
};

FiniteField make_field(int q);
std::vector<int> quadratic_residues(const FiniteField& f);

struct LatinSquare {
    int m = 0;
    std::vector<int> cells;  // row-major

    int at(int r, int c) const { return cells[r * m + c]; }
    static LatinSquare cyclic(int m);
    bool valid() const;
};

// point (i, x) of a design of type m^k laid out group by group is i*m + x
BlockDesign td_from_latin(const LatinSquare& L);
BlockDesign td_from_field(int k, int q);
BlockDesign td_product(const BlockDesign& a, const BlockDesign& b);
BlockDesign truncate_groups(const BlockDesign& td, int keep, const std::vector<int>& sizes);
BlockDesign truncate_block(const BlockDesign& td, int s, int block_index = 0);
BlockDesign remove_block_and_points(const BlockDesign& td, int block_index, const std::vector<int>& drop);

// group index and in-group index of every point, for designs whose groups are all of size m
std::vector<std::pair<int, int>> td_coordinates(const BlockDesign& td);

// removes points (with their blocks shrunk), drops empty groups and blocks of size <= min_keep,
// relabels to 0..n'-1 preserving order
BlockDesign delete_points(const BlockDesign& b, const std::vector<int>& points, int min_keep = 1);

}  // namespace ccc
