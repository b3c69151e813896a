#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellfib/kodaira.hpp"
#include "ellfib/rational.hpp"

namespace ellfib {

// Formal rational combination of named divisor classes.
struct QDivisor {
  std::map<std::string, Rational> coeff;

  QDivisor() = default;
  explicit QDivisor(std::map<std::string, Rational> c);

  static QDivisor unit(const std::string& name) {
    QDivisor d;
    d.coeff[name] = 1;
    return d;
  }

  Rational coefficient(const std::string& name) const;
  QDivisor& add(const std::string& name, const Rational& c);
  void prune();  // drop zero coefficients

  friend QDivisor operator+(const QDivisor& x, const QDivisor& y);
  friend QDivisor operator-(const QDivisor& x, const QDivisor& y);
  friend QDivisor operator*(const Rational& s, const QDivisor& x);
  friend bool operator==(const QDivisor& x, const QDivisor& y);
};

struct BlowupRecord {
  std::string exceptional;
  // Multiplicity of each pre-existing class at the blown-up point.
  std::map<std::string, int> center_multiplicities;
};

// Combinatorial surface: Picard basis with intersection form, canonical
// class, and blow-up history.  Immutable snapshot; blow_up / contract
// return new values.
class Surface {
 public:
  Surface() = default;  // empty surface (no classes)
  Surface(std::vector<std::string> basis, std::vector<std::vector<Rational>> gram,
          QDivisor canonical, std::vector<BlowupRecord> history = {});

  const std::vector<std::string>& basis() const { return basis_; }
  const QDivisor& canonical() const { return canonical_; }
  const std::vector<BlowupRecord>& history() const { return history_; }
  bool has_class(const std::string& name) const;

  // Blow up a point; class names of the old basis now denote pullbacks,
  // the new exceptional class is orthogonal to them with self-intersection
  // -1, and K gains +Gamma.  multiplicities records the point multiplicity
  // of each old class at the center (used for strict transforms and for
  // contractibility ordering).
  Surface blow_up(const std::map<std::string, int>& multiplicities,
                  const std::string& exceptional_name) const;

  // Pullback class minus mult * Gamma for every blow-up whose center lies
  // on the divisor.
  QDivisor strict_transform(const std::string& name) const;

  // Bilinear intersection pairing.
  Rational pair(const QDivisor& d1, const QDivisor& d2) const;

  // delta of Theorem-2.5-style contraction: -((K + lambda) . Gamma).
  Rational delta_of_contraction(const QDivisor& lambda,
                                const std::string& gamma) const;

  bool is_log_extremal(const QDivisor& lambda, const std::string& gamma) const;

  // True if gamma is a live exceptional class with no later blow-up
  // centered on it (i.e. it is still an irreducible (-1)-curve).
  bool is_contractible(const std::string& gamma) const;

  // Contract a contractible exceptional class: remove it from the basis
  // and push lambda forward by deleting its coefficient.
  Surface contract(const std::string& gamma, QDivisor& lambda) const;

 private:
  int index_of(const std::string& name) const;

  std::vector<std::string> basis_;
  std::vector<std::vector<Rational>> gram_;
  QDivisor canonical_;
  std::vector<BlowupRecord> history_;
};

struct MarkedComponent {
  QDivisor divisor_class;
  FiberType fiber_type;

  bool in_sigma() const { return !fiber_type.is_smooth(); }
};

// Lambda-coefficient of a single fiber type:
// a + pole/12 + (m-1)/m.
Rational lambda_coefficient(const FiberType& t);

// Lambda divisor of a marked configuration.
QDivisor lambda_of(const std::vector<MarkedComponent>& components);

struct ContractionStep {
  std::string contracted;
  Rational delta;
};

enum class MmpStatus { Minimal, Blocked };

struct MmpResult {
  std::vector<ContractionStep> steps;
  MmpStatus status = MmpStatus::Minimal;
  std::vector<std::string> blocked;  // contractible classes with (K+L).Gamma >= 0
  Surface surface;
  QDivisor lambda;
};

// Log-MMP driving loop over history-exceptional classes: repeatedly
// contract a class with (K+lambda).Gamma < 0 until none remains.
MmpResult mmp_drive(const Surface& s, const QDivisor& lambda);

}  // namespace ellfib
