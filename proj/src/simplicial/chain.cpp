#include "bellows/simplicial/chain.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bellows/errors.hpp"

namespace bellows {

Simplex make_simplex(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw PreconditionError("simplex has a repeated vertex");
  }
  return vertices;
}

int simplex_dimension(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

OrientedSimplex OrientedSimplex::from_ordered(const std::vector<Vertex>& ordered) {
  OrientedSimplex o;
  o.vertices = make_simplex(ordered);
  // Parity of the sorting permutation by counting inversions.
  int inversions = 0;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    for (std::size_t j = i + 1; j < ordered.size(); ++j) inversions += ordered[i] > ordered[j];
  }
  o.parity = inversions % 2 == 0 ? 1 : -1;
  return o;
}

Chain Chain::single(const Simplex& s, const Integer& coeff) {
  Chain c(simplex_dimension(s));
  c.add(s, coeff);
  return c;
}

Chain Chain::single(const OrientedSimplex& s, const Integer& coeff) {
  Chain c(s.dimension());
  c.add(s, coeff);
  return c;
}

Integer Chain::coefficient(const Simplex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Chain::add(const Simplex& s, const Integer& coeff) {
  if (simplex_dimension(s) != dim_) {
    throw DimensionError("adding a " + std::to_string(simplex_dimension(s)) + "-simplex to a " +
                         std::to_string(dim_) + "-chain");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, 0);
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

void Chain::add(const OrientedSimplex& s, const Integer& coeff) { add(s.vertices, s.parity * coeff); }

std::vector<Vertex> Chain::vertices() const {
  std::set<Vertex> vs;
  for (const auto& [s, c] : terms_) vs.insert(s.begin(), s.end());
  return {vs.begin(), vs.end()};
}

Chain Chain::operator-() const {
  Chain r = *this;
  for (auto& [s, c] : r.terms_) c = -c;
  return r;
}

Chain& Chain::operator+=(const Chain& o) {
  if (o.dim_ != dim_ && !o.is_zero() && !is_zero()) throw DimensionError("adding chains of different dimensions");
  if (is_zero()) dim_ = o.dim_;
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

Chain operator+(const Chain& a, const Chain& b) {
  Chain r = a;
  r += b;
  return r;
}

Chain operator-(const Chain& a, const Chain& b) { return a + (-b); }

Chain operator*(const Integer& k, const Chain& c) {
  Chain r(c.dim_);
  if (k == 0) return r;
  for (const auto& [s, v] : c.terms_) r.terms_.emplace(s, k * v);
  return r;
}

std::string Chain::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    Integer mag = abs(c);
    if (mag != 1) os << mag.get_str() << '*';
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
  }
  return os.str();
}

Chain boundary(const Chain& c) {
  Chain out(c.dimension() - 1);
  if (c.dimension() <= 0) return out;
  for (const auto& [s, coeff] : c.terms()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      out.add(face, i % 2 == 0 ? Integer(coeff) : Integer(-coeff));
    }
  }
  return out;
}

Chain cone(const Vertex& apex, const Chain& z) {
  Chain y(z.dimension() + 1);
  for (const auto& [s, c] : z.terms()) {
    if (std::binary_search(s.begin(), s.end(), apex)) continue;
    std::vector<Vertex> ordered{apex};
    ordered.insert(ordered.end(), s.begin(), s.end());
    y.add(OrientedSimplex::from_ordered(ordered), c);
  }
  return y;
}

}  // namespace bellows
