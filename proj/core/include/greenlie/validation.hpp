#ifndef GREENLIE_VALIDATION_HPP
#define GREENLIE_VALIDATION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace greenlie {

/// Malformed input document or literal. CLI exit status 2.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated operation precondition (dimension mismatch, p not prime, ...). CLI exit status 3.
/// `code` carries the stable machine-readable name, e.g. "DimensionMismatch".
class PrecondError : public std::runtime_error {
public:
  PrecondError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

/// A derived identity that should hold for validated inputs failed numerically
/// (well-definedness of an induced map, constraint preservation, descent, preimage
/// existence). Surfaced loudly: it falsifies a structural claim. CLI exit status 1.
class InternalCheckError : public std::logic_error {
public:
  InternalCheckError(std::string code, const std::string& what)
      : std::logic_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

/// One violated axiom instance: which check, on which basis indices, and a short detail
/// (typically the residual in "a/b" form).
struct Finding {
  std::string check;
  std::vector<std::size_t> indices;
  std::string detail;
};

/// Outcome of a validator: empty findings means every axiom instance holds exactly.
class ValidationReport {
public:
  bool ok() const { return findings_.empty(); }
  const std::vector<Finding>& findings() const { return findings_; }
  void add(std::string check, std::vector<std::size_t> indices, std::string detail = "");
  void merge(const ValidationReport& other);
  /// One line per finding; "" when ok.
  std::string summary() const;

private:
  std::vector<Finding> findings_;
};

/// Fail-fast construction rejected its input. Carries the full report. CLI exit status 1.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

private:
  ValidationReport report_;
};

} // namespace greenlie

#endif
