#include "curvecount/forms.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace curvecount {

namespace {

void gen_exponents(int n_vars, int degree, Exponents& cur, int pos, std::vector<Exponents>& out) {
  if (pos == n_vars - 1) {
    cur[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(degree);
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(e);
    gen_exponents(n_vars, degree - e, cur, pos + 1, out);
  }
}

std::uint64_t checked_size(const mpz_class& size, std::uint64_t cap, const std::string& what) {
  if (size > mpz_class(std::to_string(cap)))
    throw CapExceeded(what + " has " + size.get_str() + " elements, above the enumeration cap of " +
                      std::to_string(cap) + "; use sample mode instead");
  return std::stoull(size.get_str());
}

std::string monomial_text(const std::vector<std::pair<std::string, int>>& factors) {
  std::string out;
  for (const auto& [name, e] : factors) {
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string term_text(std::uint32_t c, const std::string& mono) {
  if (mono.empty()) return std::to_string(c);
  if (c == 1) return mono;
  return std::to_string(c) + '*' + mono;
}

}  // namespace

MonomialBasis::MonomialBasis(int n_vars, int degree) : n_vars_(n_vars), degree_(degree) {
  if (n_vars < 1 || degree < 0) throw std::invalid_argument("monomial basis needs n_vars >= 1 and degree >= 0");
  Exponents cur(static_cast<std::size_t>(n_vars), 0);
  gen_exponents(n_vars, degree, cur, 0, exps_);
  for (std::size_t i = 0; i < exps_.size(); ++i) index_.emplace(exps_[i], i);
}

std::size_t MonomialBasis::index_of(const Exponents& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw std::out_of_range("monomial not in basis");
  return it->second;
}

std::shared_ptr<const MonomialBasis> monomial_basis(int n_vars, int degree) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{n_vars, degree}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(n_vars, degree);
  return slot;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class space_size(std::uint32_t p, int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("space_size needs n >= 1 and d >= 0");
  const mpz_class count = binomial(static_cast<unsigned long>(d + n), static_cast<unsigned long>(n));
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, count.get_ui());
  return r;
}

Form::Form(std::uint32_t p, int n_vars, int degree)
    : p_(p), basis_(monomial_basis(n_vars, degree)), coeffs_(basis_->size(), 0) {
  PrimeField check(p);
  (void)check;
}

Form::Form(std::uint32_t p, int n_vars, int degree, std::vector<std::uint32_t> coeffs)
    : p_(p), basis_(monomial_basis(n_vars, degree)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_->size()) throw std::invalid_argument("coefficient vector length mismatch");
  for (auto& c : coeffs_) c %= p_;
}

Form Form::from_terms(std::uint32_t p, const std::vector<std::pair<std::uint32_t, Exponents>>& terms) {
  if (terms.empty()) throw std::invalid_argument("from_terms needs at least one term");
  const auto& e0 = terms.front().second;
  int degree = 0;
  for (auto e : e0) degree += e;
  Form f(p, static_cast<int>(e0.size()), degree);
  for (const auto& [c, e] : terms) {
    auto& slot = f.coeffs_[f.basis_->index_of(e)];
    slot = static_cast<std::uint32_t>((static_cast<std::uint64_t>(slot) + c) % p);
  }
  return f;
}

bool Form::is_zero() const noexcept {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

Form Form::operator+(const Form& o) const {
  if (p_ != o.p_ || n_vars() != o.n_vars() || degree() != o.degree())
    throw std::invalid_argument("adding forms of different shape");
  Form r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = (coeffs_[i] + o.coeffs_[i]) % p_;
  return r;
}

Form Form::operator*(const Form& o) const {
  if (p_ != o.p_ || n_vars() != o.n_vars()) throw std::invalid_argument("multiplying forms of different shape");
  Form r(p_, n_vars(), degree() + o.degree());
  Exponents e(static_cast<std::size_t>(n_vars()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      for (std::size_t v = 0; v < e.size(); ++v)
        e[v] = static_cast<std::uint8_t>(basis()[i][v] + o.basis()[j][v]);
      auto& slot = r.coeffs_[r.basis_->index_of(e)];
      slot = static_cast<std::uint32_t>((slot + static_cast<std::uint64_t>(coeffs_[i]) * o.coeffs_[j]) % p_);
    }
  }
  return r;
}

Form Form::scaled(std::uint32_t c) const {
  Form r = *this;
  for (auto& v : r.coeffs_) v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * c % p_);
  return r;
}

std::string to_string(const Form& f) {
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const auto c = f.coeffs()[i];
    if (c == 0) continue;
    std::vector<std::pair<std::string, int>> factors;
    for (int v = 0; v < f.n_vars(); ++v) factors.emplace_back("x" + std::to_string(v), f.basis()[i][static_cast<std::size_t>(v)]);
    if (!out.empty()) out += " + ";
    out += term_text(c, monomial_text(factors));
  }
  return out.empty() ? "0" : out;
}

FormEnumerator::FormEnumerator(std::uint32_t p, int n, int d, std::uint64_t cap)
    : p_(p), n_vars_(n + 1), degree_(d), length_(monomial_basis(n + 1, d)->size()) {
  size_ = checked_size(space_size(p, n, d), cap, "S(" + std::to_string(d) + ")");
}

Form FormEnumerator::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("form index out of range");
  std::vector<std::uint32_t> c(length_, 0);
  for (std::size_t t = 0; t < length_ && index != 0; ++t) {
    c[length_ - 1 - t] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return Form(p_, n_vars_, degree_, std::move(c));
}

void FormEnumerator::for_each(const std::function<void(const Form&)>& fn) const {
  for (std::uint64_t i = 0; i < size_; ++i) fn(at(i));
}

Form sample_form(std::uint32_t p, int n, int d, std::mt19937_64& rng) {
  const PrimeField F(p);
  std::vector<std::uint32_t> c(monomial_basis(n + 1, d)->size());
  for (auto& v : c) v = F.random(rng);
  return Form(p, n + 1, d, std::move(c));
}

std::vector<Form> partials(const Form& f) {
  if (f.degree() < 1) throw std::invalid_argument("partials need degree >= 1");
  const auto n = f.n_vars();
  std::vector<Form> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    Form d(f.p(), n, f.degree() - 1);
    std::vector<std::uint32_t> c(d.coeffs().size(), 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
      const auto e = f.basis()[i][static_cast<std::size_t>(v)];
      if (f.coeffs()[i] == 0 || e == 0) continue;
      Exponents lower = f.basis()[i];
      --lower[static_cast<std::size_t>(v)];
      c[d.basis().index_of(lower)] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(e % f.p()) * f.coeffs()[i] % f.p());
    }
    out.emplace_back(f.p(), n, f.degree() - 1, std::move(c));
  }
  return out;
}

BiPoly dehomogenize(const Form& f, int chart) {
  if (f.n_vars() != 3) throw std::invalid_argument("dehomogenize expects a form in three variables");
  if (chart < 0 || chart > 2) throw std::invalid_argument("chart index out of range");
  int rest[2];
  for (int v = 0, t = 0; v < 3; ++v)
    if (v != chart) rest[t++] = v;
  const auto d = static_cast<std::size_t>(f.degree());
  std::vector<std::vector<std::uint32_t>> grid(d + 1, std::vector<std::uint32_t>(d + 1, 0));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const auto& e = f.basis()[i];
    grid[e[static_cast<std::size_t>(rest[0])]][e[static_cast<std::size_t>(rest[1])]] = f.coeffs()[i];
  }
  return BivariateRing(PrimeField(f.p())).from_grid(grid);
}

Form power(const Form& f, unsigned e) {
  Form r(f.p(), f.n_vars(), 0, {1});
  for (unsigned i = 0; i < e; ++i) r = r * f;
  return r;
}

Form linear_substitute(const Form& f, const std::vector<std::vector<std::uint32_t>>& matrix) {
  const auto n = f.n_vars();
  if (matrix.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("substitution matrix shape");
  std::vector<Form> images;
  for (const auto& row : matrix) {
    if (row.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("substitution matrix shape");
    images.emplace_back(f.p(), n, 1);
    std::vector<std::uint32_t> c(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      Exponents e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(j)] = 1;
      c[images.back().basis().index_of(e)] = row[static_cast<std::size_t>(j)] % f.p();
    }
    images.back() = Form(f.p(), n, 1, std::move(c));
  }
  Form out(f.p(), n, f.degree());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i] == 0) continue;
    Form term(f.p(), n, 0, {f.coeffs()[i]});
    for (int v = 0; v < n; ++v) term = term * power(images[static_cast<std::size_t>(v)], f.basis()[i][static_cast<std::size_t>(v)]);
    out = out + term;
  }
  return out;
}

BiForm::BiForm(std::uint32_t p, int deg_u, int deg_v)
    : p_(p), du_(deg_u), dv_(deg_v),
      grid_(static_cast<std::size_t>(deg_u + 1) * static_cast<std::size_t>(deg_v + 1), 0) {
  if (deg_u < 0 || deg_v < 0) throw std::invalid_argument("bidegree must be nonnegative");
}

BiForm::BiForm(std::uint32_t p, int deg_u, int deg_v, std::vector<std::uint32_t> grid)
    : BiForm(p, deg_u, deg_v) {
  if (grid.size() != grid_.size()) throw std::invalid_argument("bidegree grid size mismatch");
  grid_ = std::move(grid);
  for (auto& c : grid_) c %= p_;
}

bool BiForm::is_zero() const noexcept {
  for (auto c : grid_)
    if (c != 0) return false;
  return true;
}

BiForm BiForm::operator+(const BiForm& o) const {
  if (p_ != o.p_ || du_ != o.du_ || dv_ != o.dv_) throw std::invalid_argument("adding biforms of different shape");
  BiForm r = *this;
  for (std::size_t i = 0; i < grid_.size(); ++i) r.grid_[i] = (grid_[i] + o.grid_[i]) % p_;
  return r;
}

std::string to_string(const BiForm& f) {
  std::string out;
  for (int i = 0; i <= f.deg_u(); ++i) {
    for (int j = 0; j <= f.deg_v(); ++j) {
      const auto c = f.coeff(i, j);
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      out += term_text(c, monomial_text({{"u0", f.deg_u() - i}, {"u1", i}, {"v0", f.deg_v() - j}, {"v1", j}}));
    }
  }
  return out.empty() ? "0" : out;
}

BiForm sample_biform(std::uint32_t p, int d, std::mt19937_64& rng) {
  const PrimeField F(p);
  BiForm f(p, d, d);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) f.set(i, j, F.random(rng));
  return f;
}

mpz_class biform_space_size(std::uint32_t p, int d) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>((d + 1) * (d + 1)));
  return r;
}

BiFormEnumerator::BiFormEnumerator(std::uint32_t p, int d, std::uint64_t cap) : p_(p), d_(d) {
  PrimeField check(p);
  (void)check;
  size_ = checked_size(biform_space_size(p, d), cap, "H0(O(" + std::to_string(d) + "," + std::to_string(d) + "))");
}

BiForm BiFormEnumerator::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("biform index out of range");
  const auto n = static_cast<std::size_t>((d_ + 1) * (d_ + 1));
  std::vector<std::uint32_t> g(n, 0);
  for (std::size_t t = 0; t < n && index != 0; ++t) {
    g[n - 1 - t] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return BiForm(p_, d_, d_, std::move(g));
}

std::vector<BiForm> partials(const BiForm& f) {
  const int du = f.deg_u();
  const int dv = f.deg_v();
  if (du < 1 || dv < 1) throw std::invalid_argument("biform partials need positive bidegree");
  const auto p = f.p();
  BiForm du0(p, du - 1, dv), du1(p, du - 1, dv), dv0(p, du, dv - 1), dv1(p, du, dv - 1);
  auto times = [p](int e, std::uint32_t c) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(static_cast<std::uint32_t>(e) % p) * c % p);
  };
  for (int i = 0; i <= du; ++i) {
    for (int j = 0; j <= dv; ++j) {
      const auto c = f.coeff(i, j);
      if (c == 0) continue;
      if (i < du) du0.set(i, j, times(du - i, c));
      if (i > 0) du1.set(i - 1, j, times(i, c));
      if (j < dv) dv0.set(i, j, times(dv - j, c));
      if (j > 0) dv1.set(i, j - 1, times(j, c));
    }
  }
  return {du0, du1, dv0, dv1};
}

BiForm segre_restrict(const Form& f) {
  if (f.n_vars() != 4) throw std::invalid_argument("segre_restrict expects a form on P^3");
  const int d = f.degree();
  BiForm out(f.p(), d, d);
  for (std::size_t m = 0; m < f.coeffs().size(); ++m) {
    const auto c = f.coeffs()[m];
    if (c == 0) continue;
    const auto& e = f.basis()[m];
    // x0 = u0 v0, x1 = u0 v1, x2 = u1 v0, x3 = u1 v1
    const int i = e[2] + e[3];
    const int j = e[1] + e[3];
    out.set(i, j, (out.coeff(i, j) + c) % f.p());
  }
  return out;
}

ProjPoint ProjPoint::normalized(std::shared_ptr<const ExtensionField> field,
                                std::vector<ExtensionField::Element> coords) {
  std::size_t lead = 0;
  while (lead < coords.size() && field->is_zero(coords[lead])) ++lead;
  if (lead == coords.size()) throw std::invalid_argument("projective point with all coordinates zero");
  const auto inv = field->inv(coords[lead]);
  for (auto& c : coords) c = field->mul(c, inv);
  return ProjPoint{std::move(field), std::move(coords)};
}

namespace {

ExtensionField::Element element_from_index(const ExtensionField& F, std::uint64_t index) {
  ExtensionField::Element e = F.zero();
  for (auto& c : e) {
    c = static_cast<std::uint32_t>(index % F.characteristic());
    index /= F.characteristic();
  }
  return e;
}

}  // namespace

std::vector<ProjPoint> enumerate_projective_points(int n, std::shared_ptr<const ExtensionField> field,
                                                   std::uint64_t cap) {
  if (n < 0) throw std::invalid_argument("projective dimension must be nonnegative");
  const mpz_class q = field->order();
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n + 1));
  total = (total - 1) / (q - 1);
  const auto count = checked_size(total, cap, "P^" + std::to_string(n));
  const auto qq = q.get_ui();
  std::vector<ProjPoint> out;
  out.reserve(count);
  for (int lead = 0; lead <= n; ++lead) {
    const int free_coords = n - lead;
    std::uint64_t combos = 1;
    for (int t = 0; t < free_coords; ++t) combos *= qq;
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
      std::vector<ExtensionField::Element> coords(static_cast<std::size_t>(n + 1), field->zero());
      coords[static_cast<std::size_t>(lead)] = field->one();
      std::uint64_t rest = idx;
      for (int t = n; t > lead; --t) {
        coords[static_cast<std::size_t>(t)] = element_from_index(*field, rest % qq);
        rest /= qq;
      }
      out.push_back(ProjPoint{field, std::move(coords)});
    }
  }
  return out;
}

ExtensionField::Element eval_form(const ExtensionField& ext, const Form& f,
                                  const std::vector<ExtensionField::Element>& coords) {
  if (coords.size() != static_cast<std::size_t>(f.n_vars())) throw std::invalid_argument("point dimension mismatch");
  const auto d = static_cast<std::size_t>(f.degree());
  std::vector<std::vector<ExtensionField::Element>> pw(coords.size());
  for (std::size_t v = 0; v < coords.size(); ++v) {
    pw[v].push_back(ext.one());
    for (std::size_t e = 1; e <= d; ++e) pw[v].push_back(ext.mul(pw[v].back(), coords[v]));
  }
  ExtensionField::Element acc = ext.zero();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i] == 0) continue;
    ExtensionField::Element term = ext.embed(f.coeffs()[i]);
    for (std::size_t v = 0; v < coords.size(); ++v) term = ext.mul(term, pw[v][f.basis()[i][v]]);
    acc = ext.add(acc, term);
  }
  return acc;
}

ExtensionField::Element eval_form(const Form& f, const ProjPoint& pt) { return eval_form(*pt.field, f, pt.coords); }

ExtensionField::Element eval_biform(const ExtensionField& ext, const BiForm& f,
                                    const std::vector<ExtensionField::Element>& uv) {
  if (uv.size() != 4) throw std::invalid_argument("biform evaluation needs (u0, u1, v0, v1)");
  auto powers = [&](const ExtensionField::Element& a, int n) {
    std::vector<ExtensionField::Element> out{ext.one()};
    for (int e = 1; e <= n; ++e) out.push_back(ext.mul(out.back(), a));
    return out;
  };
  const auto pu0 = powers(uv[0], f.deg_u()), pu1 = powers(uv[1], f.deg_u());
  const auto pv0 = powers(uv[2], f.deg_v()), pv1 = powers(uv[3], f.deg_v());
  ExtensionField::Element acc = ext.zero();
  for (int i = 0; i <= f.deg_u(); ++i) {
    for (int j = 0; j <= f.deg_v(); ++j) {
      const auto c = f.coeff(i, j);
      if (c == 0) continue;
      auto term = ext.mul(ext.embed(c), ext.mul(pu0[static_cast<std::size_t>(f.deg_u() - i)], pu1[static_cast<std::size_t>(i)]));
      term = ext.mul(term, ext.mul(pv0[static_cast<std::size_t>(f.deg_v() - j)], pv1[static_cast<std::size_t>(j)]));
      acc = ext.add(acc, term);
    }
  }
  return acc;
}

Surface parse_surface(const std::string& name) {
  if (name == "p2" || name == "P2") return Surface::P2;
  if (name == "segre" || name == "p1xp1" || name == "P1xP1") return Surface::SegreQuadric;
  throw std::invalid_argument("unknown surface '" + name + "' (expected p2 or segre)");
}

std::string surface_name(Surface s) { return s == Surface::P2 ? "p2" : "segre"; }

RationalPointTable::RationalPointTable(const SurfaceModel& surface, int degree) : F_(surface.p) {
  const std::uint32_t p = surface.p;
  auto pow_mod = [&](std::uint32_t a, int e) { return F_.pow(a, static_cast<std::uint64_t>(e)); };
  if (surface.tag == Surface::P2) {
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) coords_.push_back({a, b, 1});
    for (std::uint32_t a = 0; a < p; ++a) coords_.push_back({a, 1, 0});
    coords_.push_back({1, 0, 0});
    const auto basis = monomial_basis(3, degree);
    monomials_ = basis->size();
    for (const auto& pt : coords_) {
      for (std::size_t m = 0; m < monomials_; ++m) {
        std::uint32_t v = 1;
        for (std::size_t k = 0; k < 3; ++k) v = F_.mul(v, pow_mod(pt[k], (*basis)[m][k]));
        values_.push_back(v);
      }
    }
  } else {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> line;
    for (std::uint32_t a = 0; a < p; ++a) line.emplace_back(1, a);
    line.emplace_back(0, 1);
    for (auto [u0, u1] : line)
      for (auto [v0, v1] : line) coords_.push_back({u0, u1, v0, v1});
    monomials_ = static_cast<std::size_t>((degree + 1) * (degree + 1));
    for (const auto& pt : coords_) {
      for (int i = 0; i <= degree; ++i) {
        for (int j = 0; j <= degree; ++j) {
          const auto u = F_.mul(pow_mod(pt[0], degree - i), pow_mod(pt[1], i));
          const auto v = F_.mul(pow_mod(pt[2], degree - j), pow_mod(pt[3], j));
          values_.push_back(F_.mul(u, v));
        }
      }
    }
  }
  points_ = coords_.size();
}

std::uint32_t RationalPointTable::value_at(const std::vector<std::uint32_t>& coeffs, std::size_t i) const {
  if (coeffs.size() != monomials_) throw std::invalid_argument("coefficient vector does not match point table");
  const std::uint32_t* row = values_.data() + i * monomials_;
  std::uint64_t acc = 0;
  const std::uint64_t p = F_.characteristic();
  const bool small = p < (1U << 16U);
  for (std::size_t m = 0; m < monomials_; ++m) {
    acc += static_cast<std::uint64_t>(coeffs[m]) * row[m];
    if (!small || (m & 1023U) == 1023U) acc %= p;
  }
  return static_cast<std::uint32_t>(acc % p);
}

int RationalPointTable::count_zeros(const std::vector<std::uint32_t>& coeffs) const {
  int zeros = 0;
  for (std::size_t i = 0; i < points_; ++i)
    if (value_at(coeffs, i) == 0) ++zeros;
  return zeros;
}

}  // namespace curvecount
