#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace equicat {

// Permutation of the set {1,...,n}. Entry 0 is pinned to 0 so a Perm is
// also a based bijection of the based set {0,1,...,n}.
class Perm {
public:
  Perm() : img_{0} {}
  explicit Perm(int n);                       // identity on {1..n}
  explicit Perm(std::vector<int> images);     // images[i] = image of i, images[0] == 0

  int degree() const { return static_cast<int>(img_.size()) - 1; }
  int operator()(int i) const { return img_[i]; }

  Perm inverse() const;
  bool is_identity() const;

  // one-line cycle notation, e.g. "(1 2)(3 4)"; identity prints "()"
  std::string cycles() const;

  friend Perm operator*(const Perm& a, const Perm& b);  // a after b
  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  const std::vector<int>& images() const { return img_; }

  static Perm transposition(int n, int i, int j);
  static Perm from_cycles(int n, const std::string& text);

private:
  std::vector<int> img_;
};

// All permutations of {1..n} in lexicographic order of their image vectors.
// Cached per degree; degrees stay small (n <= 8).
const std::vector<Perm>& all_perms(int n);

// Index of p within all_perms(p.degree()).
int perm_rank(const Perm& p);

}  // namespace equicat
