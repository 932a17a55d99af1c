#include "equicat/perm.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace equicat {

Perm::Perm(int n) : img_(n + 1) {
  for (int i = 0; i <= n; ++i) img_[i] = i;
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  if (img_.empty() || img_[0] != 0)
    throw std::invalid_argument("Perm: entry 0 must be 0");
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw std::invalid_argument("Perm: not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < static_cast<int>(img_.size()); ++i) inv[img_[i]] = i;
  return Perm(std::move(inv));
}

bool Perm::is_identity() const {
  for (int i = 0; i < static_cast<int>(img_.size()); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("Perm: degree mismatch in composition");
  std::vector<int> img(a.img_.size());
  for (int i = 0; i < static_cast<int>(img.size()); ++i) img[i] = a.img_[b.img_[i]];
  return Perm(std::move(img));
}

std::string Perm::cycles() const {
  const int n = degree();
  std::vector<char> done(n + 1, 0);
  std::ostringstream out;
  bool any = false;
  for (int i = 1; i <= n; ++i) {
    if (done[i] || img_[i] == i) continue;
    any = true;
    out << '(' << i;
    done[i] = 1;
    for (int j = img_[i]; j != i; j = img_[j]) {
      out << ' ' << j;
      done[j] = 1;
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Perm Perm::transposition(int n, int i, int j) {
  Perm p(n);
  std::swap(p.img_[i], p.img_[j]);
  return p;
}

Perm Perm::from_cycles(int n, const std::string& text) {
  std::vector<int> img(n + 1);
  for (int i = 0; i <= n; ++i) img[i] = i;
  size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) { ++pos; continue; }
    if (text[pos] != '(') throw std::invalid_argument("cycle syntax: expected '('");
    size_t close = text.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("cycle syntax: missing ')'");
    std::istringstream in(text.substr(pos + 1, close - pos - 1));
    std::vector<int> cyc;
    int v;
    while (in >> v) {
      if (in.peek() == ',') in.get();
      if (v < 1 || v > n) throw std::invalid_argument("cycle entry out of range");
      cyc.push_back(v);
    }
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      img[from] = to;
    }
    pos = close + 1;
  }
  return Perm(std::move(img));
}

const std::vector<Perm>& all_perms(int n) {
  static std::map<int, std::vector<Perm>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<int> img(n + 1);
  for (int i = 0; i <= n; ++i) img[i] = i;
  std::vector<Perm> out;
  do {
    out.push_back(Perm(img));
  } while (std::next_permutation(img.begin() + 1, img.end()));
  return cache.emplace(n, std::move(out)).first->second;
}

int perm_rank(const Perm& p) {
  // Lehmer code relative to the lex order of all_perms.
  const int n = p.degree();
  int rank = 0;
  std::vector<int> fact(n + 1, 1);
  for (int i = 2; i <= n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<char> used(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int v = 1; v < p(i); ++v)
      if (!used[v]) ++smaller;
    rank += smaller * fact[n - i];
    used[p(i)] = 1;
  }
  return rank;
}

}  // namespace equicat
