#include "rootsmith/smith.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "rootsmith/hecke.hpp"  // parse_cycles

namespace rs {

FpMat FpMat::identity(unsigned p, std::size_t n) {
  FpMat m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void FpMat::set(std::size_t i, std::size_t j, long v) {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  (*this)(i, j) = static_cast<std::uint8_t>(r);
}

FpMat FpMat::operator*(const FpMat& o) const {
  assert(cols_ == o.rows_);
  FpMat r(p_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint32_t a = (*this)(i, k);
      if (!a) continue;
      const std::uint8_t* src = &o.d_[k * o.cols_];
      std::uint8_t* dst = &r.d_[i * o.cols_];
      for (std::size_t j = 0; j < o.cols_; ++j)
        dst[j] = static_cast<std::uint8_t>((dst[j] + a * src[j]) % p_);
    }
  return r;
}

FpMat FpMat::operator+(const FpMat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  FpMat r(p_, rows_, cols_);
  for (std::size_t i = 0; i < d_.size(); ++i)
    r.d_[i] = static_cast<std::uint8_t>((d_[i] + o.d_[i]) % p_);
  return r;
}

FpMat FpMat::operator-(const FpMat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  FpMat r(p_, rows_, cols_);
  for (std::size_t i = 0; i < d_.size(); ++i)
    r.d_[i] = static_cast<std::uint8_t>((d_[i] + p_ - o.d_[i]) % p_);
  return r;
}

bool FpMat::is_zero() const {
  return std::all_of(d_.begin(), d_.end(), [](std::uint8_t x) { return x == 0; });
}

namespace {

unsigned inv_mod(unsigned a, unsigned p) {
  unsigned r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// returns pivot columns of the rref
std::vector<std::size_t> fp_rref(FpMat& m) {
  unsigned p = m.p();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    unsigned inv = inv_mod(m(r, c), p);
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(r, j) = static_cast<std::uint8_t>(m(r, j) * inv % p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      unsigned f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = static_cast<std::uint8_t>((m(i, j) + (p - f) * m(r, j)) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const FpMat& m) {
  FpMat a = m;
  return fp_rref(a).size();
}

FpMat kernel(const FpMat& m) {
  FpMat a = m;
  auto pivots = fp_rref(a);
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
      free_cols.push_back(c);
  FpMat k(m.p(), m.cols(), free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    std::size_t fc = free_cols[t];
    k(fc, t) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      k.set(pivots[r], t, -static_cast<long>(a(r, fc)));
  }
  return k;
}

FpMat column_space(const FpMat& m) {
  // rref of the transpose; nonzero rows give the basis
  FpMat t(m.p(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  auto pivots = fp_rref(t);
  FpMat r(m.p(), m.rows(), pivots.size());
  for (std::size_t c = 0; c < pivots.size(); ++c)
    for (std::size_t i = 0; i < m.rows(); ++i) r(i, c) = t(c, i);
  return r;
}

FpMat hcat(const FpMat& a, const FpMat& b) {
  assert(a.rows() == b.rows() || a.cols() == 0 || b.cols() == 0);
  std::size_t rows = a.cols() ? a.rows() : b.rows();
  FpMat r(a.p(), rows, a.cols() + b.cols());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

FpMat span_sum(const FpMat& a, const FpMat& b) { return column_space(hcat(a, b)); }

FpMat span_intersect(const FpMat& a, const FpMat& b) {
  if (a.cols() == 0 || b.cols() == 0) return FpMat(a.p(), a.rows(), 0);
  // x = a y = b z: kernel of [a | -b]
  FpMat neg = b - (b + b);  // -b
  // careful: for p = 2, -b = b; the expression above is b - 2b = -b mod p
  FpMat glue = hcat(a, neg);
  FpMat k = kernel(glue);
  // x = a * (y-part)
  FpMat y(a.p(), a.cols(), k.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) y(i, j) = k(i, j);
  return column_space(a * y);
}

FpMat preimage(const FpMat& m, const FpMat& w) {
  // {x : m x in span(w)}: kernel of [m | -w], x part
  if (w.cols() == 0) return kernel(m);
  FpMat neg = w - (w + w);
  FpMat glue = hcat(m, neg);
  FpMat k = kernel(glue);
  FpMat x(m.p(), m.cols(), k.cols());
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) x(i, j) = k(i, j);
  return column_space(x);
}

std::size_t quotient_dim(const FpMat& a, const FpMat& b) {
  return rank(hcat(a, b)) - rank(b);
}

// --- complexes ----------------------------------------------------------------

std::size_t SigmaComplex::size() const {
  std::size_t s = 0;
  for (const auto& layer : cells) s += layer.size();
  return s;
}

namespace {

Simplex apply_sigma(const std::vector<std::size_t>& sigma, const Simplex& s) {
  Simplex t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    t[i] = static_cast<int>(sigma[static_cast<std::size_t>(s[i])]);
  std::sort(t.begin(), t.end());
  return t;
}

// sign of the permutation sorting the images (for orientation bookkeeping)
int sigma_sign(const std::vector<std::size_t>& sigma, const Simplex& s) {
  std::vector<std::size_t> img(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    img[i] = sigma[static_cast<std::size_t>(s[i])];
  int sign = 1;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) sign = -sign;
  return sign;
}

}  // namespace

bool SigmaComplex::is_regular() const {
  for (const auto& layer : cells)
    for (const auto& s : layer) {
      Simplex img = apply_sigma(sigma, s);
      if (img != s) continue;
      // setwise fixed: require pointwise fixed
      for (int v : s)
        if (sigma[static_cast<std::size_t>(v)] != static_cast<std::size_t>(v))
          return false;
    }
  return true;
}

SigmaComplex SigmaComplex::fixed_subcomplex() const {
  SigmaComplex f;
  f.p = p;
  f.num_vertices = num_vertices;
  f.sigma.resize(num_vertices);
  std::iota(f.sigma.begin(), f.sigma.end(), 0);
  f.cells.resize(cells.size());
  for (std::size_t d = 0; d < cells.size(); ++d)
    for (const auto& s : cells[d]) {
      bool fixed = true;
      for (int v : s)
        fixed = fixed &&
                sigma[static_cast<std::size_t>(v)] == static_cast<std::size_t>(v);
      if (fixed) f.cells[d].push_back(s);
    }
  while (!f.cells.empty() && f.cells.back().empty()) f.cells.pop_back();
  return f;
}

SigmaComplex make_complex(unsigned p, std::size_t num_vertices,
                          const std::vector<Simplex>& simplices,
                          const std::vector<std::size_t>& sigma) {
  if (sigma.size() != num_vertices)
    throw std::invalid_argument("sigma must permute the vertices");
  {
    std::vector<std::size_t> cur(num_vertices);
    std::iota(cur.begin(), cur.end(), 0);
    for (unsigned t = 0; t < p; ++t)
      for (auto& x : cur) x = sigma[x];
    for (std::size_t i = 0; i < num_vertices; ++i)
      if (cur[i] != i) throw std::invalid_argument("sigma^p != id on vertices");
  }
  std::set<Simplex> all;
  // close under faces
  std::vector<Simplex> work = simplices;
  for (std::size_t v = 0; v < num_vertices; ++v)
    work.push_back({static_cast<int>(v)});
  while (!work.empty()) {
    Simplex s = work.back();
    work.pop_back();
    std::sort(s.begin(), s.end());
    if (s.empty() || !all.insert(s).second) continue;
    if (s.size() >= 2)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        work.push_back(face);
      }
  }
  SigmaComplex c;
  c.p = p;
  c.num_vertices = num_vertices;
  c.sigma = sigma;
  for (const auto& s : all) {
    std::size_t d = s.size() - 1;
    if (c.cells.size() <= d) c.cells.resize(d + 1);
    c.cells[d].push_back(s);
  }
  for (auto& layer : c.cells) std::sort(layer.begin(), layer.end());
  // sigma must be simplicial: image of every simplex present
  for (const auto& layer : c.cells)
    for (const auto& s : layer) {
      Simplex img = apply_sigma(sigma, s);
      std::size_t d = s.size() - 1;
      if (!std::binary_search(c.cells[d].begin(), c.cells[d].end(), img))
        throw std::invalid_argument("sigma is not simplicial for this complex");
    }
  return c;
}

SigmaComplex barycentric_subdivision(const SigmaComplex& c) {
  // new vertices = simplices of c; new simplices = flags S_0 < S_1 < ... < S_k
  std::map<Simplex, std::size_t> vid;
  std::vector<Simplex> verts;
  for (const auto& layer : c.cells)
    for (const auto& s : layer) {
      vid[s] = verts.size();
      verts.push_back(s);
    }
  std::vector<std::size_t> sigma(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    sigma[i] = vid.at(apply_sigma(c.sigma, verts[i]));

  // flags of top simplices suffice: enumerate all chains inside each simplex
  std::vector<Simplex> out;
  // chains: for each simplex s, all strictly increasing chains of faces ending
  // at s would double count; instead enumerate all chains of the face poset
  // starting from each simplex downward
  std::vector<std::vector<std::size_t>> chains;
  // depth-first over the poset: faces(s) = codim-1 faces
  auto faces = [&](const Simplex& s) {
    std::vector<Simplex> fs;
    if (s.size() >= 2)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) f.push_back(s[i]);
        fs.push_back(f);
      }
    return fs;
  };
  std::vector<std::size_t> cur;
  std::function<void(const Simplex&)> rec = [&](const Simplex& s) {
    cur.push_back(vid.at(s));
    Simplex flag;
    for (std::size_t v : cur) flag.push_back(static_cast<int>(v));
    std::sort(flag.begin(), flag.end());
    out.push_back(flag);
    for (const auto& f : faces(s)) rec(f);
    cur.pop_back();
  };
  // chains from every simplex downward; subchains with jumps arise from the
  // face closure in make_complex
  for (const auto& layer : c.cells)
    for (const auto& s : layer) rec(s);

  return make_complex(c.p, verts.size(), out, sigma);
}

SigmaComplex subdivide_until_regular(const SigmaComplex& c, int max_rounds) {
  SigmaComplex cur = c;
  for (int i = 0; i < max_rounds; ++i) {
    if (cur.is_regular()) return cur;
    cur = barycentric_subdivision(cur);
  }
  if (!cur.is_regular())
    throw std::runtime_error("complex not regular after subdivision rounds");
  return cur;
}

SigmaComplex parse_complex(std::istream& in) {
  unsigned p = 0;
  std::size_t nv = 0;
  std::vector<Simplex> simps;
  std::string sigma_text = "()";
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key.empty() || key[0] == '#') continue;
    if (key == "p") {
      ls >> p;
    } else if (key == "vertices") {
      ls >> nv;
    } else if (key == "simplex") {
      Simplex s;
      int v;
      while (ls >> v) s.push_back(v);
      simps.push_back(s);
    } else if (key == "sigma") {
      std::getline(ls, sigma_text);
    } else {
      throw std::invalid_argument("unknown key in complex input: " + key);
    }
  }
  if (p == 0 || nv == 0)
    throw std::invalid_argument("complex input needs p and vertices");
  Perm perm = parse_cycles(sigma_text, nv);
  std::vector<std::size_t> sigma(perm.begin(), perm.end());
  return make_complex(p, nv, simps, sigma);
}

ChainData chain_data(const SigmaComplex& c) {
  ChainData cd;
  cd.p = c.p;
  std::size_t top = c.cells.size();
  cd.dims.resize(top);
  std::vector<std::map<Simplex, std::size_t>> index(top);
  for (std::size_t d = 0; d < top; ++d) {
    cd.dims[d] = c.cells[d].size();
    for (std::size_t i = 0; i < c.cells[d].size(); ++i)
      index[d][c.cells[d][i]] = i;
  }
  cd.boundary.resize(top);
  for (std::size_t d = 1; d < top; ++d) {
    FpMat b(c.p, cd.dims[d - 1], cd.dims[d]);
    for (std::size_t j = 0; j < c.cells[d].size(); ++j) {
      const Simplex& s = c.cells[d][j];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) f.push_back(s[i]);
        b.set(index[d - 1].at(f), j, (drop % 2 == 0) ? 1 : -1);
      }
    }
    cd.boundary[d] = std::move(b);
  }
  cd.sigma_chain.resize(top);
  for (std::size_t d = 0; d < top; ++d) {
    FpMat s(c.p, cd.dims[d], cd.dims[d]);
    for (std::size_t j = 0; j < c.cells[d].size(); ++j) {
      Simplex img = apply_sigma(c.sigma, c.cells[d][j]);
      s.set(index[d].at(img), j, sigma_sign(c.sigma, c.cells[d][j]));
    }
    cd.sigma_chain[d] = std::move(s);
  }
  return cd;
}

HomologyResult homology_fp(const ChainData& cd) {
  std::size_t top = cd.dims.size();
  // dd = 0
  for (std::size_t d = 2; d < top; ++d)
    if (!(cd.boundary[d - 1] * cd.boundary[d]).is_zero())
      throw std::logic_error("boundary of boundary is nonzero");
  HomologyResult hr;
  hr.betti.resize(top);
  hr.cycle_reps.resize(top);
  for (std::size_t d = 0; d < top; ++d) {
    FpMat cycles = (d >= 1) ? kernel(cd.boundary[d])
                            : FpMat::identity(cd.p, cd.dims[0]);
    FpMat bounds = (d + 1 < top) ? column_space(cd.boundary[d + 1])
                                 : FpMat(cd.p, cd.dims[d], 0);
    hr.betti[d] = quotient_dim(cycles, bounds);
    // representatives: columns of cycles that enlarge bounds
    FpMat work = bounds;
    FpMat reps(cd.p, cd.dims[d], 0);
    std::size_t base = rank(bounds);
    for (std::size_t jcol = 0; jcol < cycles.cols(); ++jcol) {
      FpMat one(cd.p, cd.dims[d], 1);
      for (std::size_t i = 0; i < cd.dims[d]; ++i) one(i, 0) = cycles(i, jcol);
      FpMat cand = hcat(work, one);
      if (rank(cand) > base + reps.cols()) {
        work = cand;
        reps = hcat(reps, one);
      }
    }
    hr.cycle_reps[d] = reps;
  }
  return hr;
}

// --- Smith double complex --------------------------------------------------------

namespace {

// total complex data: block structure with explicit differentials per parity
struct TotalComplex {
  unsigned p;
  std::size_t top;                 // number of chain degrees
  std::vector<std::size_t> dims;   // dim C_j
  std::vector<std::size_t> offs;   // block offsets in Tot_n
  std::size_t total = 0;
  // D_n for n even / odd
  FpMat d_even, d_odd;
  const FpMat& d(long n) const { return (n % 2 + 2) % 2 == 0 ? d_even : d_odd; }

  // filtration subspace F_s(n): columns of the identity in the chosen blocks
  enum class Filt { column, row };
  FpMat filt(Filt which, long s, long n) const {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < top; ++j) {
      bool in = which == Filt::column ? (n - static_cast<long>(j) <= s)
                                      : (static_cast<long>(j) <= s);
      if (in)
        for (std::size_t t = 0; t < dims[j]; ++t) cols.push_back(offs[j] + t);
    }
    FpMat m(p, total, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m(cols[c], c) = 1;
    return m;
  }
};

TotalComplex build_total(const ChainData& cd) {
  TotalComplex tc;
  tc.p = cd.p;
  tc.top = cd.dims.size();
  tc.dims = cd.dims;
  tc.offs.resize(tc.top);
  for (std::size_t j = 0; j < tc.top; ++j) {
    tc.offs[j] = tc.total;
    tc.total += tc.dims[j];
  }
  // horizontal maps
  std::vector<FpMat> one_minus(tc.top), norm(tc.top);
  for (std::size_t j = 0; j < tc.top; ++j) {
    FpMat id = FpMat::identity(cd.p, cd.dims[j]);
    one_minus[j] = id - cd.sigma_chain[j];
    FpMat n = id;
    FpMat pw = cd.sigma_chain[j];
    for (unsigned t = 1; t < cd.p; ++t) {
      n = n + pw;
      pw = pw * cd.sigma_chain[j];
    }
    norm[j] = n;
  }
  for (int parity = 0; parity < 2; ++parity) {
    FpMat d(cd.p, tc.total, tc.total);
    for (std::size_t j = 0; j < tc.top; ++j) {
      long i = static_cast<long>(parity) - static_cast<long>(j);  // i = n - j
      bool i_odd = ((i % 2) + 2) % 2 == 1;
      // horizontal component: block j -> block j
      const FpMat& h = i_odd ? one_minus[j] : norm[j];
      for (std::size_t r = 0; r < tc.dims[j]; ++r)
        for (std::size_t c2 = 0; c2 < tc.dims[j]; ++c2)
          d(tc.offs[j] + r, tc.offs[j] + c2) = h(r, c2);
      // vertical component (-1)^i boundary: block j -> block j-1
      if (j >= 1 && cd.boundary[j].rows()) {
        for (std::size_t r = 0; r < tc.dims[j - 1]; ++r)
          for (std::size_t c2 = 0; c2 < tc.dims[j]; ++c2) {
            long v = cd.boundary[j](r, c2);
            if (i_odd) v = -v;
            long cur = d(tc.offs[j - 1] + r, tc.offs[j] + c2);
            d.set(tc.offs[j - 1] + r, tc.offs[j] + c2, cur + v);
          }
      }
    }
    if (parity == 0)
      tc.d_even = std::move(d);
    else
      tc.d_odd = std::move(d);
  }
  // sanity: D_{n} o D_{n+1} = 0
  assert((tc.d_even * tc.d_odd).is_zero());
  assert((tc.d_odd * tc.d_even).is_zero());
  return tc;
}

struct PageData {
  FpMat z;      // numerator Z^r_s
  FpMat denom;  // Z^{r-1}_{s-1} + D Z^{r-1}_{s+r-1}
  std::size_t dim = 0;
};

// E^r at filtration index s, total degree n
PageData page(const TotalComplex& tc, TotalComplex::Filt which, long r, long s,
              long n) {
  const FpMat& d_n = tc.d(n);        // Tot_n -> Tot_{n-1}
  const FpMat& d_n1 = tc.d(n + 1);   // Tot_{n+1} -> Tot_n
  FpMat fs = tc.filt(which, s, n);
  FpMat fsr = tc.filt(which, s - r, n - 1);
  FpMat fs1 = tc.filt(which, s - 1, n);
  // Z^r_s = F_s ^ D^{-1} F_{s-r}
  FpMat z = span_intersect(fs, preimage(d_n, fsr));
  // Z^{r-1}_{s-1} = F_{s-1} ^ D^{-1} F_{s-r}
  FpMat z1 = span_intersect(fs1, preimage(d_n, fsr));
  // D Z^{r-1}_{s+r-1} at degree n+1: D(F_{s+r-1} ^ D^{-1} F_s)
  FpMat zup = span_intersect(tc.filt(which, s + r - 1, n + 1),
                             preimage(d_n1, fs));
  FpMat img = column_space(d_n1 * zup);
  PageData pd;
  pd.z = z;
  pd.denom = span_sum(z1, img);
  pd.dim = quotient_dim(pd.z, pd.denom);
  return pd;
}

// rank of d^r : E^r_{s,n} -> E^r_{s-r,n-1}
std::size_t page_diff_rank(const TotalComplex& tc, TotalComplex::Filt which,
                           long r, long s, long n) {
  PageData src = page(tc, which, r, s, n);
  PageData dst = page(tc, which, r, s - r, n - 1);
  FpMat img = column_space(tc.d(n) * src.z);
  return quotient_dim(img, dst.denom);
}

std::vector<std::size_t> total_homology(const TotalComplex& tc) {
  // dim H_n(Tot) for n = 0, 1 (2-periodic)
  std::vector<std::size_t> out;
  for (int n = 0; n < 2; ++n) {
    const FpMat& dn = tc.d(n);
    const FpMat& dn1 = tc.d(n + 1);
    out.push_back(quotient_dim(kernel(dn), column_space(dn1)));
  }
  return out;
}

}  // namespace

SmithReport smith_double_complex(const SigmaComplex& c) {
  SmithReport rep;
  rep.regular = c.is_regular();
  if (!rep.regular) {
    rep.detail = "complex is not regular";
    return rep;
  }
  ChainData cd = chain_data(c);
  TotalComplex tc = build_total(cd);
  long top = static_cast<long>(tc.top);

  rep.h_total = total_homology(tc);

  ChainData cdf = chain_data(c.fixed_subcomplex());
  auto hf = homology_fp(cdf);
  rep.h_fixed = hf.betti;
  auto hx = homology_fp(cd);
  rep.h_space = hx.betti;

  // sigma on homology, Tate per degree (through the gf/tate machinery)
  GFField fp = make_field(c.p, 1);
  for (std::size_t j = 0; j < tc.top; ++j) {
    const FpMat& reps = hx.cycle_reps[j];
    std::size_t h = reps.cols();
    if (h == 0) {
      rep.tate_h.emplace_back(0, 0);
      continue;
    }
    // sigma action on the homology basis: solve within cycles mod boundaries
    FpMat sreps = cd.sigma_chain[j] * reps;
    FpMat bounds = (j + 1 < tc.top) ? column_space(cd.boundary[j + 1])
                                    : FpMat(cd.p, cd.dims[j], 0);
    // coordinates: [reps | bounds] x = sreps col
    FpMat glue = hcat(reps, bounds);
    GFMatrix sh(fp, h, h);
    for (std::size_t col = 0; col < h; ++col) {
      // solve glue * x = sreps(:, col) over F_p by rref on the augmented matrix
      FpMat aug(cd.p, cd.dims[j], glue.cols() + 1);
      for (std::size_t i = 0; i < cd.dims[j]; ++i) {
        for (std::size_t jj = 0; jj < glue.cols(); ++jj) aug(i, jj) = glue(i, jj);
        aug(i, glue.cols()) = sreps(i, col);
      }
      FpMat work = aug;
      auto pivots = fp_rref(work);
      // back-substitute: rref makes it directly readable
      std::vector<unsigned> x(glue.cols(), 0);
      bool okcol = true;
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == glue.cols()) okcol = false;  // inconsistent
        else
          x[pivots[r]] = work(r, glue.cols());
      }
      if (!okcol) throw std::logic_error("sigma does not preserve cycles");
      for (std::size_t i = 0; i < h; ++i)
        sh(i, col) = GFElement::from_int(fp, static_cast<long>(x[i]));
    }
    SigmaModule mod{fp, sh};
    auto t = tate_cohomology(mod);
    rep.tate_h.emplace_back(t.t0.dim(), t.t1.dim());
  }

  // page checks at both parities, for filtration indices in a safe window
  bool hv_e1 = true, hv_e2 = true, hv_deg = true, vh_e2 = true;
  std::vector<std::size_t> hfix(tc.top, 0);
  for (std::size_t j = 0; j < rep.h_fixed.size(); ++j) hfix[j] = rep.h_fixed[j];

  std::vector<std::size_t> fixed_dims(tc.top, 0);
  {
    auto fsub = c.fixed_subcomplex();
    for (std::size_t d = 0; d < fsub.cells.size(); ++d)
      fixed_dims[d] = fsub.cells[d].size();
  }

  long big = top + 2;  // differentials of length > top+1 vanish
  for (int n = 0; n < 2; ++n) {
    // row filtration (hv): s = j
    for (long s = 0; s < top; ++s) {
      std::size_t e1 = page(tc, TotalComplex::Filt::row, 1, s, n).dim;
      if (e1 != fixed_dims[static_cast<std::size_t>(s)]) hv_e1 = false;
      std::size_t e2 = page(tc, TotalComplex::Filt::row, 2, s, n).dim;
      if (e2 != hfix[static_cast<std::size_t>(s)]) hv_e2 = false;
      std::size_t einf = page(tc, TotalComplex::Filt::row, big, s, n).dim;
      if (einf != e2) hv_deg = false;
    }
    // column filtration (vh): j = n - s, s in [n - top + 1 .. n]
    for (long j = 0; j < top; ++j) {
      long s = n - j;
      std::size_t e2 = page(tc, TotalComplex::Filt::column, 2, s, n).dim;
      // T^i H_j with i = s determined by parity of s: horizontal homology at
      // odd position is ker(1-sigma)/im N = T^0
      std::size_t want = ((s % 2) + 2) % 2 == 1
                             ? rep.tate_h[static_cast<std::size_t>(j)].first
                             : rep.tate_h[static_cast<std::size_t>(j)].second;
      if (e2 != want) vh_e2 = false;
      // record nonzero higher differentials
      for (long r = 2; r <= big; ++r) {
        std::size_t dr = page_diff_rank(tc, TotalComplex::Filt::column, r, s, n);
        if (dr > 0)
          rep.vh_higher_differentials.push_back(
              {r, s, static_cast<long>(n), static_cast<long>(dr)});
      }
    }
  }
  rep.hv_e1_is_fixed_chains = hv_e1;
  rep.hv_e2_is_fixed_homology = hv_e2;
  rep.hv_degenerates_at_e2 = hv_deg;
  rep.vh_e2_is_tate = vh_e2;

  // convergence: for each parity, sum of E^inf over one column/row sweep
  bool totals = true;
  for (int n = 0; n < 2; ++n) {
    std::size_t sum_row = 0, sum_col = 0;
    for (long j = 0; j < top; ++j) {
      sum_row += page(tc, TotalComplex::Filt::row, big, j, n).dim;
      sum_col += page(tc, TotalComplex::Filt::column, big, n - j, n).dim;
    }
    if (sum_row != rep.h_total[static_cast<std::size_t>(n)]) totals = false;
    if (sum_col != rep.h_total[static_cast<std::size_t>(n)]) totals = false;
  }
  rep.totals_agree = totals;
  rep.detail = "ok";
  return rep;
}

InequalityReport smith_inequality_check(const SigmaComplex& c) {
  InequalityReport r;
  auto rep = smith_double_complex(c);
  for (auto b : rep.h_fixed) r.sum_fixed += b;
  for (auto b : rep.h_space) r.sum_h_space += b;
  // T^{i} H_j enters the E2 page at column i = n - j; for fixed n the parity
  // of i alternates with j
  std::size_t even_n = 0, odd_n = 0;
  for (std::size_t j = 0; j < rep.tate_h.size(); ++j) {
    auto [t0, t1] = rep.tate_h[j];
    // column s = n - j is odd exactly when n, j have opposite parities;
    // odd columns carry T^0
    std::size_t at_even_n = (j % 2 == 1) ? t0 : t1;
    std::size_t at_odd_n = (j % 2 == 0) ? t0 : t1;
    even_n += at_even_n;
    odd_n += at_odd_n;
    r.sum_tate_both += t0 + t1;
  }
  r.sum_tate = std::min(even_n, odd_n);
  r.holds = r.sum_fixed <= r.sum_tate && r.sum_fixed <= r.sum_h_space;
  r.e2_matches_fixed = rep.hv_e2_is_fixed_homology;
  return r;
}

// --- fixtures -------------------------------------------------------------------

SigmaComplex point_complex(unsigned p) {
  return make_complex(p, 1, {{0}}, {0});
}

SigmaComplex circle_complex(unsigned p, std::size_t vertices) {
  std::vector<Simplex> simps;
  for (std::size_t i = 0; i < vertices; ++i)
    simps.push_back({static_cast<int>(i),
                     static_cast<int>((i + 1) % vertices)});
  std::vector<std::size_t> id(vertices);
  std::iota(id.begin(), id.end(), 0);
  return make_complex(p, vertices, simps, id);
}

SigmaComplex free_circle_cover(unsigned p) {
  std::size_t n = 3 * p;
  std::vector<Simplex> simps;
  for (std::size_t i = 0; i < n; ++i)
    simps.push_back({static_cast<int>(i), static_cast<int>((i + 1) % n)});
  std::vector<std::size_t> rot(n);
  for (std::size_t i = 0; i < n; ++i) rot[i] = (i + 3) % n;
  return make_complex(p, n, simps, rot);
}

SigmaComplex sphere_half_turn() {
  // octahedron: vertices 0,1 = +-e1; 2,3 = +-e2; 4,5 = +-e3
  std::vector<Simplex> faces;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) faces.push_back({a, b, c});
  // rotation by pi about the e3 axis
  std::vector<std::size_t> rot{1, 0, 3, 2, 4, 5};
  return make_complex(2, 6, faces, rot);
}

SigmaComplex sphere_rotation_p3() {
  // boundary of the 3-simplex; sigma = 3-cycle on {0,1,2}
  std::vector<Simplex> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  return make_complex(3, 4, faces, {1, 2, 0, 3});
}

SigmaComplex filled_triangle_rotation() {
  return make_complex(3, 3, {{0, 1, 2}}, {1, 2, 0});
}

SigmaComplex edge_swap() { return make_complex(2, 2, {{0, 1}}, {1, 0}); }

SigmaComplex random_regular_complex(unsigned p, std::uint64_t seed,
                                    std::size_t max_simplices) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> nfree(1, 4), nfix(1, 4), ntri(1, 4);

  // fixed part: a small random 2-complex on nf vertices
  std::size_t nf = nfix(rng) + 2;
  std::vector<Simplex> simps;
  std::uniform_int_distribution<std::size_t> pick(0, nf - 1);
  for (std::size_t t = 0; t < ntri(rng) + 1; ++t) {
    std::set<std::size_t> vs;
    while (vs.size() < 3) vs.insert(pick(rng));
    Simplex s(vs.begin(), vs.end());
    simps.push_back(s);
  }
  // free part: p rotated copies of a small random complex on nc vertices
  std::size_t nc = nfree(rng) + 2;
  std::uniform_int_distribution<std::size_t> pickc(0, nc - 1);
  std::vector<Simplex> core;
  for (std::size_t t = 0; t < ntri(rng); ++t) {
    std::set<std::size_t> vs;
    while (vs.size() < 3) vs.insert(pickc(rng));
    core.push_back(Simplex(vs.begin(), vs.end()));
  }
  for (std::size_t t = 0; t < nfree(rng); ++t) {
    std::set<std::size_t> vs;
    while (vs.size() < 2) vs.insert(pickc(rng));
    core.push_back(Simplex(vs.begin(), vs.end()));
  }
  std::size_t total_vertices = nf + p * nc;
  auto copy_vertex = [&](unsigned blk, std::size_t v) {
    return static_cast<int>(nf + blk * nc + v);
  };
  for (unsigned blk = 0; blk < p; ++blk)
    for (const auto& s : core) {
      Simplex t;
      for (int v : s) t.push_back(copy_vertex(blk, static_cast<std::size_t>(v)));
      simps.push_back(t);
    }
  // join: edges from one fixed vertex to the sigma-orbit of a core vertex
  std::size_t anchor = pick(rng);
  std::size_t cv = pickc(rng);
  for (unsigned blk = 0; blk < p; ++blk)
    simps.push_back({static_cast<int>(anchor), copy_vertex(blk, cv)});

  std::vector<std::size_t> sigma(total_vertices);
  std::iota(sigma.begin(), sigma.begin() + nf, 0);
  for (unsigned blk = 0; blk < p; ++blk)
    for (std::size_t v = 0; v < nc; ++v)
      sigma[nf + blk * nc + v] = nf + ((blk + 1) % p) * nc + v;
  auto c = make_complex(p, total_vertices, simps, sigma);
  if (!c.is_regular()) c = subdivide_until_regular(c);
  if (c.size() > max_simplices)
    return random_regular_complex(p, seed + 0x9e3779b97f4a7c15ull, max_simplices);
  return c;
}

}  // namespace rs
