#include "rootsmith/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rs {

namespace {

long height(const Coeffs& v) {
  long h = 0;
  for (long c : v) h += c;
  return h;
}

bool height_lex_less(const Coeffs& a, const Coeffs& b) {
  long ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

// Cartan matrix entries cartan[i][j] = <alpha_j, alpha_i^vee> for one
// irreducible factor in Bourbaki numbering.
std::vector<std::vector<long>> irreducible_cartan(char letter, std::size_t n) {
  auto path = [&](std::size_t k) {
    std::vector<std::vector<long>> c(k, std::vector<long>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      c[i][i] = 2;
      if (i + 1 < k) c[i][i + 1] = c[i + 1][i] = -1;
    }
    return c;
  };
  switch (letter) {
    case 'A':
      return path(n);
    case 'B': {  // alpha_n short
      assert(n >= 2);
      auto c = path(n);
      c[n - 2][n - 1] = -1;
      c[n - 1][n - 2] = -2;
      return c;
    }
    case 'C': {  // alpha_n long
      assert(n >= 2);
      auto c = path(n);
      c[n - 2][n - 1] = -2;
      c[n - 1][n - 2] = -1;
      return c;
    }
    case 'D': {
      assert(n >= 3);
      auto c = path(n);
      // node n attaches to n-2, not n-1
      c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
      c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
      return c;
    }
    case 'E': {
      assert(n >= 6 && n <= 8);
      // chain 1-3-4-5-...-n with 2 attached to 4
      std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
      for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
      auto link = [&](std::size_t a, std::size_t b) {
        c[a - 1][b - 1] = c[b - 1][a - 1] = -1;
      };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (std::size_t k = 4; k < n; ++k) link(k, k + 1);
      return c;
    }
    case 'F': {
      assert(n == 4);
      auto c = path(4);
      c[1][2] = -1;  // <alpha_3, alpha_2^vee>
      c[2][1] = -2;  // <alpha_2, alpha_3^vee>
      return c;
    }
    case 'G': {
      assert(n == 2);
      // alpha_1 short, alpha_2 long
      return {{2, -3}, {-1, 2}};
    }
    default:
      throw std::invalid_argument("unknown Cartan letter");
  }
}

}  // namespace

std::string CartanType::str() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += factors[i].first;
    s += std::to_string(factors[i].second);
  }
  return s.empty() ? "0" : s;
}

CartanType CartanType::parse(const std::string& label) {
  CartanType t;
  std::size_t i = 0;
  while (i < label.size()) {
    char letter = label[i++];
    if (letter < 'A' || letter > 'G')
      throw std::invalid_argument("bad Cartan label: " + label);
    std::size_t j = i;
    while (j < label.size() && isdigit(label[j])) ++j;
    if (j == i) throw std::invalid_argument("bad Cartan label: " + label);
    t.factors.emplace_back(letter, std::stoul(label.substr(i, j - i)));
    i = j;
    if (i < label.size()) {
      if (label[i] != 'x') throw std::invalid_argument("bad Cartan label: " + label);
      ++i;
    }
  }
  std::sort(t.factors.begin(), t.factors.end());
  return t;
}

WeylElement WeylElement::identity(std::size_t rank) {
  return WeylElement(IntMatrix::identity(rank));
}

Coeffs WeylElement::apply(const Coeffs& v) const {
  IntVec iv(v.begin(), v.end());
  IntVec r = m_.apply(iv);
  Coeffs out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    assert(r[i].fits_slong_p());
    out[i] = r[i].get_si();
  }
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  return WeylElement(m_ * o.m_);
}

WeylElement WeylElement::inverse() const {
  auto inv = rs::inverse(RatMatrix::from_int(m_));
  assert(inv);
  auto im = inv->to_int();
  assert(im);
  return WeylElement(*im);
}

bool WeylElement::is_identity() const {
  return m_ == IntMatrix::identity(m_.rows());
}

long WeylElement::order(long bound) const {
  WeylElement acc = *this;
  for (long k = 1; k <= bound; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * (*this);
  }
  return -1;
}

WeylElement DiagramAutomorphism::lattice_action(std::size_t rank) const {
  IntMatrix m(rank, rank);
  for (std::size_t j = 0; j < rank; ++j) m(perm[j], j) = 1;
  return WeylElement(m);
}

std::size_t DiagramAutomorphism::order() const {
  std::size_t n = perm.size(), ord = 1;
  std::vector<std::size_t> acc = perm;
  auto is_id = [&](const std::vector<std::size_t>& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != i) return false;
    return true;
  };
  while (!is_id(acc)) {
    std::vector<std::size_t> nxt(n);
    for (std::size_t i = 0; i < n; ++i) nxt[i] = perm[acc[i]];
    acc = nxt;
    ++ord;
  }
  return ord;
}

namespace {

// d_i for one connected node set, shortest root = 1
void fill_dvec(const std::vector<std::vector<long>>& cartan,
               const std::vector<std::size_t>& nodes, std::vector<Rat>& dvec) {
  std::size_t r = nodes.size();
  std::vector<Rat> d(r, Rat(0));
  d[0] = 1;
  std::queue<std::size_t> bfs;
  bfs.push(0);
  while (!bfs.empty()) {
    std::size_t i = bfs.front();
    bfs.pop();
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j || cartan[nodes[i]][nodes[j]] == 0 || d[j] != 0) continue;
      d[j] = d[i] * Rat(cartan[nodes[i]][nodes[j]]) /
             Rat(cartan[nodes[j]][nodes[i]]);
      bfs.push(j);
    }
  }
  Rat mn = d[0];
  for (auto& x : d) mn = std::min(mn, x);
  for (std::size_t i = 0; i < r; ++i) dvec[nodes[i]] = d[i] / mn;
}

}  // namespace

RootDatumPtr RootDatum::build(const std::string& cartan_label) {
  CartanType type = CartanType::parse(cartan_label);
  auto rd = std::make_shared<RootDatum>();
  rd->type_ = type;
  std::size_t rank = 0;
  for (auto& [l, r] : type.factors) rank += r;
  rd->rank_ = rank;
  rd->cartan_.assign(rank, std::vector<long>(rank, 0));
  std::size_t off = 0;
  for (auto& [l, r] : type.factors) {
    auto block = irreducible_cartan(l, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        rd->cartan_[off + i][off + j] = block[i][j];
    off += r;
  }

  // d_i = (alpha_i, alpha_i)/2 from d_i a_ij = d_j a_ji, shortest = 1
  rd->dvec_.assign(rank, Rat(0));
  off = 0;
  for (auto& [l, r] : type.factors) {
    std::vector<std::size_t> nodes(r);
    std::iota(nodes.begin(), nodes.end(), off);
    fill_dvec(rd->cartan_, nodes, rd->dvec_);
    off += r;
  }

  // reflection closure of the simple roots
  std::set<Coeffs> seen;
  std::queue<Coeffs> work;
  for (std::size_t i = 0; i < rank; ++i) {
    Coeffs e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    work.push(e);
  }
  while (!work.empty()) {
    Coeffs v = work.front();
    work.pop();
    for (std::size_t i = 0; i < rank; ++i) {
      long p = 0;
      for (std::size_t j = 0; j < rank; ++j) p += v[j] * rd->cartan_[i][j];
      if (p == 0) continue;
      Coeffs w = v;
      w[i] -= p;
      if (seen.insert(w).second) work.push(w);
    }
  }
  rd->roots_.assign(seen.begin(), seen.end());
  std::sort(rd->roots_.begin(), rd->roots_.end(), height_lex_less);
  for (std::size_t i = 0; i < rd->roots_.size(); ++i)
    rd->index_[rd->roots_[i]] = i;
  for (const auto& r : rd->roots_)
    if (height(r) > 0) rd->positive_.push_back(r);

  // ambient embedding for E8: the paper's coordinates
  if (type.factors.size() == 1 && type.factors[0] == std::make_pair('E', std::size_t(8))) {
    RatMatrix s(8, 8);
    const long num[8][8] = {
        {-1, -2, 2, 0, 0, 0, 0, 0},  {1, -2, -2, 2, 0, 0, 0, 0},
        {1, 0, 0, -2, 2, 0, 0, 0},   {1, 0, 0, 0, -2, 2, 0, 0},
        {1, 0, 0, 0, 0, -2, 2, 0},   {1, 0, 0, 0, 0, 0, -2, 2},
        {1, 0, 0, 0, 0, 0, 0, -2},   {-1, 0, 0, 0, 0, 0, 0, 0}};
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) s(i, j) = rat_frac(num[i][j], 2);
    rd->ambient_ = s;
  }
  return rd;
}

RootDatumPtr RootDatum::build_from_cartan(const IntMatrix& cartan) {
  auto rd = std::make_shared<RootDatum>();
  std::size_t rank = cartan.rows();
  rd->rank_ = rank;
  rd->type_ = classify_cartan(cartan);
  rd->cartan_.assign(rank, std::vector<long>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      rd->cartan_[i][j] = static_cast<long>(cartan(i, j).get_si());

  rd->dvec_.assign(rank, Rat(0));
  std::vector<long> comp(rank, -1);
  long ncomp = 0;
  for (std::size_t i = 0; i < rank; ++i) {
    if (comp[i] != -1) continue;
    std::vector<std::size_t> nodes;
    std::queue<std::size_t> bfs;
    bfs.push(i);
    comp[i] = ncomp;
    while (!bfs.empty()) {
      std::size_t v = bfs.front();
      bfs.pop();
      nodes.push_back(v);
      for (std::size_t j = 0; j < rank; ++j)
        if (comp[j] == -1 && rd->cartan_[v][j] != 0) {
          comp[j] = ncomp;
          bfs.push(j);
        }
    }
    fill_dvec(rd->cartan_, nodes, rd->dvec_);
    ++ncomp;
  }

  std::set<Coeffs> seen;
  std::queue<Coeffs> work;
  for (std::size_t i = 0; i < rank; ++i) {
    Coeffs e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    work.push(e);
  }
  while (!work.empty()) {
    Coeffs v = work.front();
    work.pop();
    for (std::size_t i = 0; i < rank; ++i) {
      long p = 0;
      for (std::size_t j = 0; j < rank; ++j) p += v[j] * rd->cartan_[i][j];
      if (p == 0) continue;
      Coeffs w = v;
      w[i] -= p;
      if (seen.insert(w).second) work.push(w);
    }
  }
  rd->roots_.assign(seen.begin(), seen.end());
  std::sort(rd->roots_.begin(), rd->roots_.end(),
            [](const Coeffs& a, const Coeffs& b) {
              long ha = 0, hb = 0;
              for (long c : a) ha += c;
              for (long c : b) hb += c;
              if (ha != hb) return ha < hb;
              return a < b;
            });
  for (std::size_t i = 0; i < rd->roots_.size(); ++i)
    rd->index_[rd->roots_[i]] = i;
  for (const auto& r : rd->roots_) {
    long hh = 0;
    for (long c : r) hh += c;
    if (hh > 0) rd->positive_.push_back(r);
  }
  return rd;
}

IntMatrix RootDatum::cartan_matrix() const {
  IntMatrix m(rank_, rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) m(i, j) = cartan_[i][j];
  return m;
}

bool RootDatum::is_root(const Coeffs& v) const { return index_.count(v) > 0; }

bool RootDatum::is_positive_root(const Coeffs& v) const {
  return is_root(v) && height(v) > 0;
}

Coeffs RootDatum::simple_root(std::size_t i) const {
  Coeffs e(rank_, 0);
  e[i] = 1;
  return e;
}

Coeffs RootDatum::highest_root() const {
  assert(type_.factors.size() == 1);
  return roots_.back();  // height-lex order puts it last
}

Rat RootDatum::inner(const Coeffs& a, const Coeffs& b) const {
  Rat s(0);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j)
      if (b[j] != 0) s += Rat(a[i]) * Rat(b[j]) * dvec_[i] * Rat(cartan_[i][j]);
  }
  return s;
}

Rat RootDatum::norm2(const Coeffs& a) const { return inner(a, a); }

long RootDatum::pairing(const Coeffs& beta, const Coeffs& gamma) const {
  Rat v = Rat(2) * inner(beta, gamma) / norm2(gamma);
  assert(v.get_den() == 1);
  return static_cast<long>(v.get_num().get_si());
}

Coeffs RootDatum::coroot(const Coeffs& gamma) const {
  Rat dg = norm2(gamma) / 2;
  Coeffs out(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    Rat c = Rat(gamma[i]) * dvec_[i] / dg;
    assert(c.get_den() == 1);
    out[i] = static_cast<long>(c.get_num().get_si());
  }
  return out;
}

long RootDatum::simple_pairing(const Coeffs& v, std::size_t i) const {
  long p = 0;
  for (std::size_t j = 0; j < rank_; ++j) p += v[j] * cartan_[i][j];
  return p;
}

Coeffs RootDatum::sum_positive_roots() const {
  Coeffs s(rank_, 0);
  for (const auto& r : positive_)
    for (std::size_t i = 0; i < rank_; ++i) s[i] += r[i];
  return s;
}

WeylElement RootDatum::reflection(const Coeffs& root) const {
  assert(is_root(root));
  IntMatrix m(rank_, rank_);
  for (std::size_t j = 0; j < rank_; ++j) {
    Coeffs img = simple_root(j);
    long p = pairing(img, root);
    for (std::size_t i = 0; i < rank_; ++i) m(i, j) = (i == j ? 1 : 0) - p * root[i];
  }
  return WeylElement(m);
}

WeylElement RootDatum::simple_reflection(std::size_t i) const {
  return reflection(simple_root(i));
}

WeylElement RootDatum::product_of_reflections(
    const std::vector<Coeffs>& roots) const {
  WeylElement w = WeylElement::identity(rank_);
  for (const auto& r : roots) w = w * reflection(r);
  return w;
}

bool RootDatum::is_weyl_endomorphism(const WeylElement& w) const {
  for (const auto& r : roots_)
    if (!is_root(w.apply(r))) return false;
  // pairing preservation follows from checking it on the basis
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) {
      Coeffs a = simple_root(i), b = simple_root(j);
      if (pairing(w.apply(a), w.apply(b)) != pairing(a, b)) return false;
    }
  return true;
}

std::vector<Coeffs> RootDatum::minus_one_eigenroots(
    const WeylElement& w, const std::optional<std::vector<Coeffs>>& simples) const {
  std::vector<Coeffs> out;
  if (!simples) {
    for (const auto& r : positive_) {
      Coeffs img = w.apply(r);
      bool neg = true;
      for (std::size_t i = 0; i < rank_; ++i) neg = neg && img[i] == -r[i];
      if (neg) out.push_back(r);
    }
    return out;
  }
  SimpleSystem sys{shared_from_this(), *simples};
  for (const auto& r : roots_) {
    if (!sys.is_positive(r)) continue;
    Coeffs img = w.apply(r);
    bool neg = true;
    for (std::size_t i = 0; i < rank_; ++i) neg = neg && img[i] == -r[i];
    if (neg) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), height_lex_less);
  return out;
}

bool RootDatum::is_strongly_orthogonal(const std::vector<Coeffs>& roots) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      Coeffs sum(rank_), dif(rank_);
      for (std::size_t k = 0; k < rank_; ++k) {
        sum[k] = roots[i][k] + roots[j][k];
        dif[k] = roots[i][k] - roots[j][k];
      }
      if (is_root(sum) || is_root(dif)) return false;
    }
  return true;
}

RatVec RootDatum::to_ambient(const Coeffs& v) const {
  assert(ambient_);
  RatVec x(rank_);
  for (std::size_t i = 0; i < rank_; ++i) x[i] = Rat(v[i]);
  return ambient_->apply(x);
}

std::optional<Coeffs> RootDatum::from_ambient(const RatVec& v) const {
  assert(ambient_);
  auto sol = solve(*ambient_, v);
  if (!sol) return std::nullopt;
  Coeffs out(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    if ((*sol)[i].get_den() != 1) return std::nullopt;
    out[i] = static_cast<long>((*sol)[i].get_num().get_si());
  }
  return out;
}

std::optional<WeylElement> RootDatum::weyl_from_ambient(
    const RatMatrix& q, std::string* error) const {
  assert(ambient_);
  auto fail = [&](const std::string& msg) -> std::optional<WeylElement> {
    if (error) *error = msg;
    return std::nullopt;
  };
  if (q.rows() != rank_ || q.cols() != rank_) return fail("wrong shape");
  RatMatrix qtq = q.transpose() * q;
  if (!(qtq == RatMatrix::identity(rank_))) return fail("not orthogonal");
  auto sinv = inverse(*ambient_);
  assert(sinv);
  RatMatrix m = (*sinv) * q * (*ambient_);
  auto mi = m.to_int();
  if (!mi) return fail("does not preserve the lattice");
  WeylElement w(*mi);
  for (const auto& r : roots_)
    if (!is_root(w.apply(r))) return fail("does not permute the roots");
  return w;
}

std::vector<DiagramAutomorphism> RootDatum::diagram_automorphisms() const {
  std::vector<DiagramAutomorphism> out;
  std::vector<std::size_t> perm(rank_);
  std::vector<bool> used(rank_, false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == rank_) {
      out.push_back(DiagramAutomorphism{perm});
      return;
    }
    for (std::size_t v = 0; v < rank_; ++v) {
      if (used[v]) continue;
      bool ok = cartan_[v][v] == cartan_[i][i];
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = cartan_[perm[j]][v] == cartan_[j][i] &&
             cartan_[v][perm[j]] == cartan_[i][j];
      }
      if (!ok) continue;
      used[v] = true;
      perm[i] = v;
      rec(i + 1);
      used[v] = false;
    }
  };
  rec(0);
  return out;
}

// --- SimpleSystem ---------------------------------------------------------

RatVec SimpleSystem::coordinates(const Coeffs& v) const {
  std::size_t n = rd->rank();
  RatMatrix m(n, simples.size());
  for (std::size_t j = 0; j < simples.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = Rat(simples[j][i]);
  RatVec b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = Rat(v[i]);
  auto sol = solve(m, b);
  assert(sol);
  return *sol;
}

bool SimpleSystem::is_simple_system_of_ambient(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (simples.size() != rd->rank()) return fail("wrong cardinality");
  IntMatrix c(simples.size(), simples.size());
  for (std::size_t i = 0; i < simples.size(); ++i) {
    if (!rd->is_root(simples[i])) return fail("entry is not a root");
    for (std::size_t j = 0; j < simples.size(); ++j) {
      long p = rd->pairing(simples[j], simples[i]);
      if (i != j && p > 0) return fail("positive off-diagonal pairing");
      c(i, j) = p;
    }
  }
  if (rank(c) != rd->rank()) return fail("not linearly independent");
  if (!(classify_cartan(c) == rd->type())) return fail("wrong Cartan type");
  return true;
}

bool SimpleSystem::is_positive(const Coeffs& root) const {
  RatVec c = coordinates(root);
  bool has_pos = false;
  for (const auto& x : c) {
    if (x < 0) return false;
    if (x > 0) has_pos = true;
  }
  return has_pos;
}

std::vector<Coeffs> SimpleSystem::positive_roots() const {
  std::vector<Coeffs> out;
  for (const auto& r : rd->roots())
    if (is_positive(r)) out.push_back(r);
  return out;
}

Coeffs SimpleSystem::sum_positive_roots() const {
  Coeffs s(rd->rank(), 0);
  for (const auto& r : positive_roots())
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += r[i];
  return s;
}

Rat SimpleSystem::rho_pairing(const Coeffs& beta) const {
  Coeffs sigma = sum_positive_roots();
  // <Sigma/2, beta^vee> = (Sigma, beta)/(beta, beta)
  return rd->inner(sigma, beta) / rd->norm2(beta);
}

// --- Subsystem -------------------------------------------------------------

IntMatrix Subsystem::cartan() const {
  IntMatrix c(simples.size(), simples.size());
  for (std::size_t i = 0; i < simples.size(); ++i)
    for (std::size_t j = 0; j < simples.size(); ++j)
      c(i, j) = ambient->pairing(simples[j], simples[i]);
  return c;
}

CartanType Subsystem::type() const { return classify_cartan(cartan()); }

std::vector<Coeffs> Subsystem::roots() const {
  std::set<Coeffs> seen;
  std::queue<Coeffs> work;
  for (const auto& s : simples) {
    assert(ambient->is_root(s));
    seen.insert(s);
    work.push(s);
  }
  while (!work.empty()) {
    Coeffs v = work.front();
    work.pop();
    for (const auto& s : simples) {
      long p = ambient->pairing(v, s);
      Coeffs w = v;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= p * s[i];
      if (seen.insert(w).second) work.push(w);
    }
  }
  std::vector<Coeffs> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), height_lex_less);
  return out;
}

std::optional<RatVec> Subsystem::coordinates(const Coeffs& v) const {
  std::size_t n = ambient->rank();
  RatMatrix m(n, simples.size());
  for (std::size_t j = 0; j < simples.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = Rat(simples[j][i]);
  RatVec b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = Rat(v[i]);
  return solve(m, b);
}

std::vector<Coeffs> Subsystem::positive_roots() const {
  std::vector<Coeffs> out;
  for (const auto& r : roots()) {
    auto c = coordinates(r);
    assert(c);
    bool nonneg = true, pos = false;
    for (const auto& x : *c) {
      if (x < 0) nonneg = false;
      if (x > 0) pos = true;
    }
    if (nonneg && pos) out.push_back(r);
  }
  return out;
}

Coeffs Subsystem::sum_positive_roots() const {
  Coeffs s(ambient->rank(), 0);
  for (const auto& r : positive_roots())
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += r[i];
  return s;
}

bool Subsystem::contains_root(const Coeffs& r) const {
  auto rts = roots();
  return std::find(rts.begin(), rts.end(), r) != rts.end();
}

// --- Cartan classification ----------------------------------------------------

CartanType classify_cartan(const IntMatrix& cartan) {
  std::size_t n = cartan.rows();
  assert(cartan.cols() == n);
  // connected components
  std::vector<long> comp(n, -1);
  long ncomp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (comp[i] != -1) continue;
    std::queue<std::size_t> q;
    q.push(i);
    comp[i] = ncomp;
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] == -1 && cartan(v, j) != 0) {
          comp[j] = ncomp;
          q.push(j);
        }
    }
    ++ncomp;
  }

  CartanType type;
  for (long c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) nodes.push_back(i);
    std::size_t k = nodes.size();
    auto a = [&](std::size_t i, std::size_t j) {
      return cartan(nodes[i], nodes[j]).get_si();
    };
    if (k == 1) {
      type.factors.emplace_back('A', 1);
      continue;
    }
    long max_prod = 0;
    std::size_t deg3 = 0, deg1 = 0;
    std::vector<std::size_t> degree(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        long prod = a(i, j) * a(j, i);
        if (prod > 0 && j > i) max_prod = std::max(max_prod, prod);
        if (prod > 0) ++degree[i];
      }
    for (auto d : degree) {
      if (d >= 3) ++deg3;
      if (d == 1) ++deg1;
    }
    char letter = 0;
    if (max_prod == 3) {
      assert(k == 2);
      letter = 'G';
    } else if (max_prod == 2) {
      // find the double edge
      std::size_t di = 0, dj = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if (i != j && a(i, j) * a(j, i) == 2) {
            di = i;
            dj = j;
          }
      if (k == 2) {
        letter = 'B';
      } else if (degree[di] == 2 && degree[dj] == 2 && k == 4) {
        letter = 'F';
      } else {
        // path; short side determines B vs C.  a(i,j) = <alpha_j, alpha_i^vee>
        // and |alpha_i| >= |alpha_j| iff |a(i,j)| >= |a(j,i)|... count short
        // nodes via d-vector propagation
        std::vector<Rat> d(k, Rat(0));
        d[0] = 1;
        std::queue<std::size_t> bfs;
        bfs.push(0);
        while (!bfs.empty()) {
          std::size_t i = bfs.front();
          bfs.pop();
          for (std::size_t j = 0; j < k; ++j)
            if (i != j && a(i, j) != 0 && d[j] == 0) {
              d[j] = d[i] * Rat(a(i, j)) / Rat(a(j, i));
              bfs.push(j);
            }
        }
        Rat mn = d[0];
        for (auto& x : d) mn = std::min(mn, x);
        std::size_t nshort = 0;
        for (auto& x : d)
          if (x == mn) ++nshort;
        letter = (nshort == 1) ? 'B' : 'C';
      }
    } else {
      // simply laced
      if (deg3 == 0) {
        letter = 'A';
      } else {
        assert(deg3 == 1);
        // prong lengths from the branch node
        std::size_t branch = 0;
        for (std::size_t i = 0; i < k; ++i)
          if (degree[i] == 3) branch = i;
        std::vector<std::size_t> prongs;
        for (std::size_t s = 0; s < k; ++s) {
          if (s == branch || a(branch, s) == 0) continue;
          std::size_t len = 1, prev = branch, cur = s;
          while (true) {
            std::size_t nxt = k;
            for (std::size_t t = 0; t < k; ++t)
              if (t != prev && t != cur && a(cur, t) != 0) nxt = t;
            if (nxt == k) break;
            prev = cur;
            cur = nxt;
            ++len;
          }
          prongs.push_back(len);
        }
        std::sort(prongs.begin(), prongs.end());
        assert(prongs.size() == 3);
        if (prongs[0] == 1 && prongs[1] == 1)
          letter = 'D';
        else if (prongs[0] == 1 && prongs[1] == 2 && prongs[2] <= 4)
          letter = 'E';
        else
          throw std::invalid_argument("not a finite-type Cartan matrix");
      }
    }
    type.factors.emplace_back(letter, k);
  }
  std::sort(type.factors.begin(), type.factors.end());
  return type;
}

// --- Weyl restriction ------------------------------------------------------

WeylRestriction weyl_restriction(const WeylElement& w, const Subsystem& h) {
  const RootDatum& g = *h.ambient;
  auto h_roots = h.roots();
  std::set<Coeffs> h_rootset(h_roots.begin(), h_roots.end());
  auto h_positive = h.positive_roots();
  std::set<Coeffs> h_pos_set(h_positive.begin(), h_positive.end());

  // P = w Phi+(G) ^ Phi(H)
  std::set<Coeffs> p;
  for (const auto& r : g.positive_roots()) {
    Coeffs img = w.apply(r);
    if (h_rootset.count(img)) p.insert(img);
  }
  assert(p.size() * 2 == h_rootset.size());

  WeylElement nu = WeylElement::identity(g.rank());
  std::set<Coeffs> q = p;
  // peel simple reflections until q is the standard positive system of H
  for (std::size_t guard = 0; q != h_pos_set; ++guard) {
    assert(guard < 10000);
    bool moved = false;
    for (const auto& delta : h.simples) {
      Coeffs neg = delta;
      for (auto& x : neg) x = -x;
      if (!q.count(neg)) continue;
      WeylElement s = g.reflection(delta);
      std::set<Coeffs> q2;
      for (const auto& r : q) q2.insert(s.apply(r));
      q = std::move(q2);
      nu = nu * s;
      moved = true;
      break;
    }
    assert(moved);
  }
  WeylRestriction out;
  out.nu = nu;
  out.bar = nu.inverse() * w;
  return out;
}

// --- extended diagram ----------------------------------------------------------

ExtendedDynkin extended_dynkin(const RootDatumPtr& rd) {
  if (rd->type().factors.size() != 1)
    throw std::invalid_argument("extended diagram requires an irreducible system");
  ExtendedDynkin e;
  e.rd = rd;
  Coeffs a0 = rd->highest_root();
  e.marks.assign(a0.begin(), a0.end());
  e.lowest_root.assign(a0.size(), 0);
  for (std::size_t i = 0; i < a0.size(); ++i) e.lowest_root[i] = -a0[i];
  return e;
}

IntMatrix ExtendedDynkin::cartan() const {
  std::size_t n = rd->rank();
  IntMatrix c(n + 1, n + 1);
  std::vector<Coeffs> nodes;
  nodes.push_back(lowest_root);
  for (std::size_t i = 0; i < n; ++i) nodes.push_back(rd->simple_root(i));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      c(i, j) = rd->pairing(nodes[j], nodes[i]);
  return c;
}

std::vector<std::vector<std::size_t>> ExtendedDynkin::automorphisms() const {
  IntMatrix c = cartan();
  std::size_t n = c.rows();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.push_back(perm);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        std::size_t pj = (j == i) ? v : perm[j];
        ok = c(pj, v) == c(j, i) && c(v, pj) == c(i, j);
      }
      if (!ok) continue;
      used[v] = true;
      perm[i] = v;
      rec(i + 1);
      used[v] = false;
    }
  };
  rec(0);
  return out;
}

RatVec half_sum_positive(const SimpleSystem& sys) {
  Coeffs sigma = sys.sum_positive_roots();
  RatVec rho(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) rho[i] = rat_frac(sigma[i], 2);
  return rho;
}

std::string RootDatum::to_json() const {
  nlohmann::json j;
  j["type"] = type_.str();
  j["rank"] = rank_;
  std::vector<std::vector<long>> cm(rank_, std::vector<long>(rank_));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t jx = 0; jx < rank_; ++jx) cm[i][jx] = cartan_[i][jx];
  j["cartan"] = cm;
  if (ambient_) {
    std::vector<std::vector<std::string>> a(rank_, std::vector<std::string>(rank_));
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t jx = 0; jx < rank_; ++jx)
        a[i][jx] = (*ambient_)(i, jx).get_str();
    j["simple_roots_ambient"] = a;
  }
  j["num_roots"] = roots_.size();
  return j.dump();
}

std::string weyl_to_json(const WeylElement& w) {
  nlohmann::json j;
  std::size_t n = w.matrix().rows();
  std::vector<std::vector<std::string>> m(n, std::vector<std::string>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jx = 0; jx < n; ++jx)
      m[i][jx] = w.matrix()(i, jx).get_str();
  j["matrix"] = m;
  j["order"] = w.order();
  return j.dump();
}

}  // namespace rs
