#include "solw/group_elem.hpp"

#include <algorithm>
#include <cstring>

namespace solw {

namespace {

FqMat fq_mul(const FieldCtx &F, const FqMat &x, const FqMat &y) {
  check(x.n == y.n, "matrix dimension mismatch");
  FqMat r;
  r.n = x.n;
  r.a.assign((size_t)x.n * x.n, 0);
  int n = x.n;
  for (int i = 0; i < n; ++i)
    for (int kk = 0; kk < n; ++kk) {
      auto xv = x.a[i * n + kk];
      if (F.is_zero(xv)) continue;
      for (int j = 0; j < n; ++j) {
        auto yv = y.a[kk * n + j];
        if (F.is_zero(yv)) continue;
        r.a[i * n + j] = F.add(r.a[i * n + j], F.mul(xv, yv));
      }
    }
  return r;
}

FqMat fq_inv(const FieldCtx &F, const FqMat &x) {
  int n = x.n;
  std::vector<FieldCtx::elem> a(x.a);
  FqMat r;
  r.n = x.n;
  r.a.assign((size_t)n * n, 0);
  for (int i = 0; i < n; ++i) r.a[i * n + i] = F.one();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!F.is_zero(a[i * n + col])) { piv = i; break; }
    check(piv >= 0, "singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[col * n + j]);
        std::swap(r.a[piv * n + j], r.a[col * n + j]);
      }
    }
    auto d = F.inv(a[col * n + col]);
    for (int j = 0; j < n; ++j) {
      a[col * n + j] = F.mul(a[col * n + j], d);
      r.a[col * n + j] = F.mul(r.a[col * n + j], d);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      auto f = a[i * n + col];
      if (F.is_zero(f)) continue;
      for (int j = 0; j < n; ++j) {
        a[i * n + j] = F.sub(a[i * n + j], F.mul(f, a[col * n + j]));
        r.a[i * n + j] = F.sub(r.a[i * n + j], F.mul(f, r.a[col * n + j]));
      }
    }
  }
  return r;
}

ZkMat zk_mul(const ZkMat &x, const ZkMat &y) {
  check(x.n == y.n && x.k == y.k, "residue matrix mismatch");
  int n = x.n;
  uint32_t mask = (1u << x.k) - 1;
  ZkMat r;
  r.n = x.n;
  r.k = x.k;
  r.a.assign((size_t)n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int kk = 0; kk < n; ++kk) {
      uint32_t xv = x.a[i * n + kk];
      if (!xv) continue;
      for (int j = 0; j < n; ++j)
        r.a[i * n + j] = (uint16_t)((r.a[i * n + j] + xv * y.a[kk * n + j]) & mask);
    }
  return r;
}

ZkMat zk_inv(const ZkMat &x) {
  // invertible mod 2^k iff invertible mod 2; lift by Newton iteration
  int n = x.n;
  uint32_t mask = (1u << x.k) - 1;
  // inverse mod 2 by Gaussian elimination
  std::vector<uint8_t> a((size_t)n * n), inv2((size_t)n * n, 0);
  for (int i = 0; i < n * n; ++i) a[i] = x.a[i] & 1;
  for (int i = 0; i < n; ++i) inv2[i * n + i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a[i * n + col]) { piv = i; break; }
    check(piv >= 0, "residue matrix not invertible");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[col * n + j]);
        std::swap(inv2[piv * n + j], inv2[col * n + j]);
      }
    for (int i = 0; i < n; ++i) {
      if (i == col || !a[i * n + col]) continue;
      for (int j = 0; j < n; ++j) {
        a[i * n + j] ^= a[col * n + j];
        inv2[i * n + j] ^= inv2[col * n + j];
      }
    }
  }
  ZkMat y;
  y.n = x.n;
  y.k = x.k;
  y.a.assign((size_t)n * n, 0);
  for (int i = 0; i < n * n; ++i) y.a[i] = inv2[i];
  // Newton: y <- y(2I - xy), doubles precision each round
  for (int round = 0; round < 5; ++round) {
    ZkMat xy = zk_mul(x, y);
    ZkMat t;
    t.n = x.n;
    t.k = x.k;
    t.a.assign((size_t)n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        uint32_t v = (i == j ? 2u : 0u);
        t.a[i * n + j] = (uint16_t)((v + mask + 1 - xy.a[i * n + j]) & mask);
      }
    y = zk_mul(y, t);
  }
  return y;
}

Perm perm_mul(const Perm &x, const Perm &y) {
  // (x*y)(i) = x(y(i)) : apply y first
  check(x.img.size() == y.img.size(), "permutation degree mismatch");
  Perm r;
  r.img.resize(x.img.size());
  for (size_t i = 0; i < r.img.size(); ++i) r.img[i] = x.img[y.img[i]];
  return r;
}

Perm perm_inv(const Perm &x) {
  Perm r;
  r.img.resize(x.img.size());
  for (size_t i = 0; i < x.img.size(); ++i) r.img[x.img[i]] = (uint16_t)i;
  return r;
}

SemiElem semi_mul(const SemiElem &x, const SemiElem &y) {
  check(x.n == y.n && x.k == y.k, "semidirect mismatch");
  uint32_t mask = (1u << x.k) - 1;
  SemiElem r;
  r.n = x.n;
  r.k = x.k;
  r.v.assign(x.n, 0);
  int n = x.n;
  for (int i = 0; i < n; ++i) {
    uint32_t acc = x.v[i];
    for (int j = 0; j < n; ++j) acc += (uint32_t)x.m[i * n + j] * y.v[j];
    r.v[i] = (uint16_t)(acc & mask);
  }
  ZkMat mx{x.n, x.k, x.m}, my{y.n, y.k, y.m};
  r.m = zk_mul(mx, my).a;
  return r;
}

SemiElem semi_inv(const SemiElem &x) {
  uint32_t mask = (1u << x.k) - 1;
  ZkMat mx{x.n, x.k, x.m};
  ZkMat mi = zk_inv(mx);
  SemiElem r;
  r.n = x.n;
  r.k = x.k;
  r.m = mi.a;
  r.v.assign(x.n, 0);
  int n = x.n;
  for (int i = 0; i < n; ++i) {
    uint32_t acc = 0;
    for (int j = 0; j < n; ++j) acc += (uint32_t)mi.a[i * n + j] * x.v[j];
    r.v[i] = (uint16_t)((mask + 1 - (acc & mask)) & mask);
  }
  return r;
}

} // namespace

GroupElem GroupCtx::raw_mul(const GroupElem &x, const GroupElem &y) const {
  if (x.is_fq()) return GroupElem{fq_mul(*field, x.fq(), y.fq())};
  if (std::holds_alternative<ZkMat>(x.p)) return GroupElem{zk_mul(x.zk(), y.zk())};
  if (std::holds_alternative<Perm>(x.p)) return GroupElem{perm_mul(x.perm(), y.perm())};
  return GroupElem{semi_mul(x.semi(), y.semi())};
}

GroupElem GroupCtx::raw_inv(const GroupElem &x) const {
  if (x.is_fq()) return GroupElem{fq_inv(*field, x.fq())};
  if (std::holds_alternative<ZkMat>(x.p)) return GroupElem{zk_inv(x.zk())};
  if (std::holds_alternative<Perm>(x.p)) return GroupElem{perm_inv(x.perm())};
  return GroupElem{semi_inv(x.semi())};
}

GroupElem GroupCtx::canon(GroupElem x) const {
  if (quotient_center.empty()) return x;
  GroupElem best = x;
  std::string benc = encode(best);
  for (const auto &z : quotient_center) {
    GroupElem cand = raw_mul(x, z);
    std::string e = encode(cand);
    if (e < benc) {
      best = std::move(cand);
      benc = std::move(e);
    }
  }
  return best;
}

GroupElem GroupCtx::mul(const GroupElem &x, const GroupElem &y) const {
  return canon(raw_mul(x, y));
}

GroupElem GroupCtx::inv(const GroupElem &x) const { return canon(raw_inv(x)); }

GroupElem GroupCtx::identity_like(const GroupElem &sample) const {
  if (sample.is_fq()) {
    FqMat m;
    m.n = sample.fq().n;
    m.a.assign((size_t)m.n * m.n, field->zero());
    for (int i = 0; i < m.n; ++i) m.a[i * m.n + i] = field->one();
    return canon(GroupElem{m});
  }
  if (std::holds_alternative<ZkMat>(sample.p)) {
    ZkMat m;
    m.n = sample.zk().n;
    m.k = sample.zk().k;
    m.a.assign((size_t)m.n * m.n, 0);
    for (int i = 0; i < m.n; ++i) m.a[i * m.n + i] = 1;
    return canon(GroupElem{m});
  }
  if (std::holds_alternative<Perm>(sample.p)) {
    Perm q;
    q.img.resize(sample.perm().img.size());
    for (size_t i = 0; i < q.img.size(); ++i) q.img[i] = (uint16_t)i;
    return canon(GroupElem{q});
  }
  SemiElem s;
  s.n = sample.semi().n;
  s.k = sample.semi().k;
  s.v.assign(s.n, 0);
  s.m.assign((size_t)s.n * s.n, 0);
  for (int i = 0; i < s.n; ++i) s.m[i * s.n + i] = 1;
  return canon(GroupElem{s});
}

std::string encode(const GroupElem &e) {
  std::string out;
  auto push16 = [&](uint16_t v) {
    out.push_back((char)(v & 0xFF));
    out.push_back((char)(v >> 8));
  };
  if (e.is_fq()) {
    out.push_back('F');
    out.push_back((char)e.fq().n);
    for (auto v : e.fq().a) push16(v);
  } else if (std::holds_alternative<ZkMat>(e.p)) {
    out.push_back('Z');
    out.push_back((char)e.zk().n);
    out.push_back((char)e.zk().k);
    for (auto v : e.zk().a) push16(v);
  } else if (std::holds_alternative<Perm>(e.p)) {
    out.push_back('P');
    for (auto v : e.perm().img) push16(v);
  } else {
    out.push_back('S');
    out.push_back((char)e.semi().n);
    out.push_back((char)e.semi().k);
    for (auto v : e.semi().v) push16(v);
    for (auto v : e.semi().m) push16(v);
  }
  return out;
}

bool elem_eq(const GroupElem &a, const GroupElem &b) { return encode(a) == encode(b); }

GroupElem fq_identity(const std::shared_ptr<FieldCtx> &F, int n) {
  FqMat m;
  m.n = (uint8_t)n;
  m.a.assign((size_t)n * n, F->zero());
  for (int i = 0; i < n; ++i) m.a[i * n + i] = F->one();
  return GroupElem{m};
}

GroupElem perm_identity(int deg) {
  Perm q;
  q.img.resize(deg);
  for (int i = 0; i < deg; ++i) q.img[i] = (uint16_t)i;
  return GroupElem{q};
}

GroupElem perm_from_cycles(int deg, const std::vector<std::vector<int>> &cycles) {
  Perm q;
  q.img.resize(deg);
  for (int i = 0; i < deg; ++i) q.img[i] = (uint16_t)i;
  for (const auto &c : cycles)
    for (size_t i = 0; i < c.size(); ++i) q.img[c[i]] = (uint16_t)c[(i + 1) % c.size()];
  return GroupElem{q};
}

GroupElem zk_identity(int n, int k) {
  ZkMat m;
  m.n = (uint8_t)n;
  m.k = (uint8_t)k;
  m.a.assign((size_t)n * n, 0);
  for (int i = 0; i < n; ++i) m.a[i * n + i] = 1;
  return GroupElem{m};
}

} // namespace solw
