#include "greenlie/alternating.hpp"

#include <algorithm>
#include <cassert>

namespace greenlie {

std::size_t binomial(std::size_t d, std::size_t n) {
  if (n > d) return 0;
  n = std::min(n, d - n);
  std::size_t out = 1;
  for (std::size_t i = 0; i < n; ++i) out = out * (d - i) / (i + 1);
  return out;
}

TupleTable::TupleTable(std::size_t d, std::size_t n) : d_(d), n_(n) {
  if (n > d) return;
  std::vector<std::size_t> cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = i;
  while (true) {
    tuples_.push_back(cur);
    if (n == 0) break;
    // next combination in lexicographic order
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == d - n + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  assert(tuples_.size() == binomial(d, n));
}

std::size_t TupleTable::index_of(std::span<const std::size_t> tuple) const {
  auto it = std::lower_bound(tuples_.begin(), tuples_.end(), tuple,
                             [](const std::vector<std::size_t>& a, std::span<const std::size_t> b) {
                               return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                             });
  assert(it != tuples_.end() && std::equal(it->begin(), it->end(), tuple.begin()));
  return static_cast<std::size_t>(it - tuples_.begin());
}

AltMap AltMap::zero(std::size_t degree, std::size_t source_dim, std::size_t module_dim) {
  AltMap f;
  f.degree = degree;
  f.source_dim = source_dim;
  f.module_dim = module_dim;
  f.coeff = Vec(binomial(source_dim, degree) * module_dim);
  return f;
}

namespace {

/// Sorts indices in place; returns the permutation sign, or 0 on a repeated index.
int sort_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j] <= idx[j - 1]; --j) {
      if (idx[j] == idx[j - 1]) return 0;
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  return sign;
}

} // namespace

Vec AltMap::eval_basis(std::span<const std::size_t> indices) const {
  assert(indices.size() == degree);
  std::vector<std::size_t> idx(indices.begin(), indices.end());
  const int sign = sort_sign(idx);
  Vec out(module_dim);
  if (sign == 0) return out;
  TupleTable table(source_dim, degree);
  const std::size_t t = table.index_of(idx);
  for (std::size_t k = 0; k < module_dim; ++k) {
    const Rational& c = coeff[t * module_dim + k];
    if (!c.is_zero()) out[k] = sign > 0 ? c : -c;
  }
  return out;
}

Vec AltMap::eval_first_general(const Vec& v, std::span<const std::size_t> rest) const {
  assert(v.size() == source_dim && rest.size() + 1 == degree);
  std::vector<std::size_t> idx(degree);
  std::copy(rest.begin(), rest.end(), idx.begin() + 1);
  Vec out(module_dim);
  for (std::size_t c = 0; c < source_dim; ++c) {
    if (v[c].is_zero()) continue;
    idx[0] = c;
    Vec val = eval_basis(idx);
    if (!greenlie::is_zero(val)) axpy(out, v[c], val);
  }
  return out;
}

Vec AltMap::eval(std::span<const Vec> args) const {
  assert(args.size() == degree);
  Vec out(module_dim);
  std::vector<std::size_t> idx(degree);
  // nested expansion over basis indices, skipping zero coordinates
  std::vector<Rational> partial(degree + 1);
  partial[0] = 1;
  std::size_t slot = 0;
  idx.assign(degree, 0);
  if (degree == 0) {
    for (std::size_t k = 0; k < module_dim; ++k) out[k] = coeff[k];
    return out;
  }
  while (true) {
    if (idx[slot] >= source_dim) {
      if (slot == 0) break;
      --slot;
      ++idx[slot];
      continue;
    }
    const Rational& coord = args[slot][idx[slot]];
    if (coord.is_zero()) {
      ++idx[slot];
      continue;
    }
    partial[slot + 1] = partial[slot] * coord;
    if (slot + 1 == degree) {
      Vec val = eval_basis(idx);
      if (!greenlie::is_zero(val)) axpy(out, partial[degree], val);
      ++idx[slot];
    } else {
      ++slot;
      idx[slot] = 0;
    }
  }
  return out;
}

AltMap operator+(const AltMap& a, const AltMap& b) {
  assert(a.degree == b.degree && a.source_dim == b.source_dim && a.module_dim == b.module_dim);
  AltMap out = a;
  add_in_place(out.coeff, b.coeff);
  return out;
}

AltMap operator-(const AltMap& a, const AltMap& b) {
  assert(a.degree == b.degree && a.source_dim == b.source_dim && a.module_dim == b.module_dim);
  AltMap out = a;
  sub_in_place(out.coeff, b.coeff);
  return out;
}

AltMap scaled(const AltMap& f, const Rational& s) {
  AltMap out = f;
  out.coeff = scaled(f.coeff, s);
  return out;
}

AltMap ce_apply(const Representation& rho, const AltMap& f) {
  const std::size_t d = f.source_dim;
  const std::size_t n = f.degree;
  assert(rho.algebra.dim() == d && rho.module_dim == f.module_dim);
  AltMap out = AltMap::zero(n + 1, d, f.module_dim);
  TupleTable table(d, n + 1);
  std::vector<std::size_t> sub(n);
  for (std::size_t u = 0; u < table.size(); ++u) {
    const auto& U = table[u];
    Vec acc(f.module_dim);
    // action terms: (-1)^i x_i . f(U minus slot i)
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t k = 0, w = 0; k <= n; ++k)
        if (k != i) sub[w++] = U[k];
      Vec val = f.eval_basis(sub);
      if (greenlie::is_zero(val)) continue;
      Vec acted = rho.act(U[i]).apply(val);
      if (i % 2 == 0)
        add_in_place(acc, acted);
      else
        sub_in_place(acc, acted);
    }
    // bracket terms: (-1)^{i+j} f([x_i,x_j], U minus slots i,j)
    if (n + 1 >= 2) {
      std::vector<std::size_t> sub2(n >= 1 ? n - 1 : 0);
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
          Vec w = rho.algebra.bracket_basis(U[i], U[j]);
          if (greenlie::is_zero(w)) continue;
          for (std::size_t k = 0, t = 0; k <= n; ++k)
            if (k != i && k != j) sub2[t++] = U[k];
          Vec val = f.eval_first_general(w, sub2);
          if (greenlie::is_zero(val)) continue;
          if ((i + j) % 2 == 0)
            add_in_place(acc, val);
          else
            sub_in_place(acc, val);
        }
    }
    for (std::size_t k = 0; k < f.module_dim; ++k) out.coeff[u * f.module_dim + k] = acc[k];
  }
  return out;
}

Matrix ce_coboundary(const Representation& rho, std::size_t n) {
  const std::size_t d = rho.algebra.dim();
  const std::size_t m = rho.module_dim;
  const std::size_t cols = binomial(d, n) * m;
  const std::size_t rows = binomial(d, n + 1) * m;
  Matrix out(rows, cols);
  for (std::size_t col = 0; col < cols; ++col) {
    AltMap f = AltMap::zero(n, d, m);
    f.coeff[col] = 1;
    AltMap g = ce_apply(rho, f);
    for (std::size_t r = 0; r < rows; ++r)
      if (!g.coeff[r].is_zero()) out.at(r, col) = g.coeff[r];
  }
  return out;
}

} // namespace greenlie
