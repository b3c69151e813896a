#include "ellfib/logsurface.hpp"

#include <algorithm>

namespace ellfib {

QDivisor::QDivisor(std::map<std::string, Rational> c) : coeff(std::move(c)) {
  prune();
}

Rational QDivisor::coefficient(const std::string& name) const {
  auto it = coeff.find(name);
  return it == coeff.end() ? Rational(0) : it->second;
}

QDivisor& QDivisor::add(const std::string& name, const Rational& c) {
  Rational& v = coeff[name];
  v += c;
  if (v == 0) coeff.erase(name);
  return *this;
}

void QDivisor::prune() {
  for (auto it = coeff.begin(); it != coeff.end();)
    it = (it->second == 0) ? coeff.erase(it) : std::next(it);
}

QDivisor operator+(const QDivisor& x, const QDivisor& y) {
  QDivisor r = x;
  for (const auto& [k, v] : y.coeff) r.add(k, v);
  return r;
}

QDivisor operator-(const QDivisor& x, const QDivisor& y) {
  QDivisor r = x;
  for (const auto& [k, v] : y.coeff) r.add(k, -v);
  return r;
}

QDivisor operator*(const Rational& s, const QDivisor& x) {
  QDivisor r;
  if (s == 0) return r;
  for (const auto& [k, v] : x.coeff) r.coeff[k] = s * v;
  return r;
}

bool operator==(const QDivisor& x, const QDivisor& y) {
  return x.coeff == y.coeff;
}

Surface::Surface(std::vector<std::string> basis,
                 std::vector<std::vector<Rational>> gram, QDivisor canonical,
                 std::vector<BlowupRecord> history)
    : basis_(std::move(basis)),
      gram_(std::move(gram)),
      canonical_(std::move(canonical)),
      history_(std::move(history)) {
  if (gram_.size() != basis_.size())
    throw DomainError("InvalidSurface", "gram size mismatch");
  for (size_t i = 0; i < gram_.size(); ++i) {
    if (gram_[i].size() != basis_.size())
      throw DomainError("InvalidSurface", "gram row size mismatch");
    for (size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i])
        throw DomainError("InvalidSurface", "gram not symmetric");
  }
}

bool Surface::has_class(const std::string& name) const {
  return std::find(basis_.begin(), basis_.end(), name) != basis_.end();
}

int Surface::index_of(const std::string& name) const {
  auto it = std::find(basis_.begin(), basis_.end(), name);
  if (it == basis_.end())
    throw UnknownClassError("unknown divisor class: " + name);
  return static_cast<int>(it - basis_.begin());
}

Surface Surface::blow_up(const std::map<std::string, int>& multiplicities,
                         const std::string& exceptional_name) const {
  if (has_class(exceptional_name))
    throw DomainError("DuplicateClass", "class already present: " + exceptional_name);
  for (const auto& [name, m] : multiplicities) {
    index_of(name);
    if (m < 0) throw InvalidMultiplicityError("negative center multiplicity");
  }
  std::vector<std::string> basis = basis_;
  basis.push_back(exceptional_name);

  // Pullbacks of old classes stay orthogonal to Gamma; Gamma^2 = -1.
  std::vector<std::vector<Rational>> gram = gram_;
  for (auto& row : gram) row.push_back(0);
  std::vector<Rational> last(basis.size(), Rational(0));
  last.back() = -1;
  gram.push_back(std::move(last));

  QDivisor canonical = canonical_;
  canonical.add(exceptional_name, 1);

  std::vector<BlowupRecord> history = history_;
  BlowupRecord rec{exceptional_name, {}};
  for (const auto& [name, m] : multiplicities)
    if (m > 0) rec.center_multiplicities[name] = m;
  history.push_back(std::move(rec));

  return Surface(std::move(basis), std::move(gram), std::move(canonical),
                 std::move(history));
}

QDivisor Surface::strict_transform(const std::string& name) const {
  index_of(name);
  QDivisor d = QDivisor::unit(name);
  for (const auto& rec : history_) {
    auto it = rec.center_multiplicities.find(name);
    if (it != rec.center_multiplicities.end())
      d.add(rec.exceptional, Rational(-it->second));
  }
  return d;
}

Rational Surface::pair(const QDivisor& d1, const QDivisor& d2) const {
  Rational total = 0;
  for (const auto& [n1, c1] : d1.coeff) {
    int i = index_of(n1);
    for (const auto& [n2, c2] : d2.coeff) total += c1 * c2 * gram_[i][index_of(n2)];
  }
  return total;
}

Rational Surface::delta_of_contraction(const QDivisor& lambda,
                                       const std::string& gamma) const {
  int i = index_of(gamma);
  bool in_history = std::any_of(history_.begin(), history_.end(),
                                [&](const BlowupRecord& r) { return r.exceptional == gamma; });
  if (!in_history || gram_[i][i] != -1)
    throw NotExceptionalError(gamma + " is not an exceptional (-1)-class");
  return -pair(canonical_ + lambda, QDivisor::unit(gamma));
}

bool Surface::is_log_extremal(const QDivisor& lambda,
                              const std::string& gamma) const {
  return delta_of_contraction(lambda, gamma) > 0;
}

bool Surface::is_contractible(const std::string& gamma) const {
  bool found = false;
  for (const auto& rec : history_) {
    if (rec.exceptional == gamma) {
      found = true;
      continue;
    }
    if (found && rec.center_multiplicities.count(gamma)) return false;
  }
  return found;
}

Surface Surface::contract(const std::string& gamma, QDivisor& lambda) const {
  if (!is_contractible(gamma))
    throw NotExceptionalError(gamma + " is not contractible");
  int idx = index_of(gamma);

  std::vector<std::string> basis = basis_;
  basis.erase(basis.begin() + idx);
  std::vector<std::vector<Rational>> gram = gram_;
  gram.erase(gram.begin() + idx);
  for (auto& row : gram) row.erase(row.begin() + idx);

  QDivisor canonical = canonical_;
  canonical.coeff.erase(gamma);
  lambda.coeff.erase(gamma);

  std::vector<BlowupRecord> history;
  for (const auto& rec : history_)
    if (rec.exceptional != gamma) history.push_back(rec);

  return Surface(std::move(basis), std::move(gram), std::move(canonical),
                 std::move(history));
}

Rational lambda_coefficient(const FiberType& t) {
  Rational c = coefficient_a(t) + make_rational(pole_order(t), 12) +
               make_rational(t.multiplicity - 1, t.multiplicity);
  return c;
}

QDivisor lambda_of(const std::vector<MarkedComponent>& components) {
  QDivisor lambda;
  for (const auto& comp : components)
    lambda = lambda + lambda_coefficient(comp.fiber_type) * comp.divisor_class;
  return lambda;
}

MmpResult mmp_drive(const Surface& s, const QDivisor& lambda) {
  MmpResult res{{}, MmpStatus::Minimal, {}, s, lambda};
  bool progress = true;
  while (progress) {
    progress = false;
    const auto& history = res.surface.history();
    // Latest-first so towers unwind in the order they were built.
    for (auto it = history.rbegin(); it != history.rend(); ++it) {
      const std::string gamma = it->exceptional;
      if (!res.surface.is_contractible(gamma)) continue;
      Rational delta = res.surface.delta_of_contraction(res.lambda, gamma);
      if (delta > 0) {
        res.steps.push_back({gamma, delta});
        res.surface = res.surface.contract(gamma, res.lambda);
        progress = true;
        break;
      }
    }
  }
  for (const auto& rec : res.surface.history()) {
    if (res.surface.is_contractible(rec.exceptional))
      res.blocked.push_back(rec.exceptional);
  }
  res.status = res.blocked.empty() ? MmpStatus::Minimal : MmpStatus::Blocked;
  return res;
}

}  // namespace ellfib
