#include "greenlie/validation.hpp"

namespace greenlie {

void ValidationReport::add(std::string check, std::vector<std::size_t> indices, std::string detail) {
  findings_.push_back(Finding{std::move(check), std::move(indices), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other) {
  findings_.insert(findings_.end(), other.findings_.begin(), other.findings_.end());
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& f : findings_) {
    out += f.check;
    if (!f.indices.empty()) {
      out += " at (";
      for (std::size_t i = 0; i < f.indices.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(f.indices[i]);
      }
      out += ")";
    }
    if (!f.detail.empty()) {
      out += ": ";
      out += f.detail;
    }
    out += "\n";
  }
  return out;
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("validation failed:\n" + report.summary()), report_(std::move(report)) {}

} // namespace greenlie
