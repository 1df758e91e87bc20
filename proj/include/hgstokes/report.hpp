#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "hgstokes/matrix.hpp"
#include "hgstokes/numeric_monodromy.hpp"

namespace hgs {

enum class ReportFormat { json, text, latex };

struct IdentityRecord {
  std::string name;
  std::string paper_ref;  // wire-format tag of the verified identity
  bool pass = false;
};

struct LabeledMatrix {
  std::string label;
  Mat m;
};

struct ReportDocument {
  long k = 0;
  std::string section;
  std::vector<LabeledMatrix> matrices;
  std::vector<IdentityRecord> identities;
  // numeric sections only
  bool has_numeric = false;
  CMat numeric_matrix;
  double estimated_error = 0.0;
};

namespace detail {

inline nlohmann::ordered_json matrix_to_json(const Mat& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string complex_to_string(const Complex& z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

inline nlohmann::ordered_json doc_to_json_one(const ReportDocument& doc, const std::string& section,
                                              const Mat* m) {
  nlohmann::ordered_json j;
  j["k"] = doc.k;
  j["section"] = section;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (m != nullptr) {
    rows = matrix_to_json(*m);
  } else if (doc.has_numeric) {
    for (Eigen::Index i = 0; i < doc.numeric_matrix.rows(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (Eigen::Index c = 0; c < doc.numeric_matrix.cols(); ++c) {
        row.push_back(complex_to_string(doc.numeric_matrix(i, c)));
      }
      rows.push_back(std::move(row));
    }
  }
  j["matrix"] = std::move(rows);
  nlohmann::ordered_json ids = nlohmann::ordered_json::array();
  for (const auto& id : doc.identities) {
    nlohmann::ordered_json rec;
    rec["name"] = id.name;
    rec["paper_ref"] = id.paper_ref;
    rec["pass"] = id.pass;
    ids.push_back(std::move(rec));
  }
  j["identities"] = std::move(ids);
  if (doc.has_numeric) j["estimated_error"] = doc.estimated_error;
  return j;
}

}  // namespace detail

inline std::string emit_json(const ReportDocument& doc) {
  if (doc.matrices.size() <= 1 || doc.has_numeric) {
    const Mat* m = doc.matrices.empty() ? nullptr : &doc.matrices.front().m;
    return detail::doc_to_json_one(doc, doc.section, m).dump(2) + "\n";
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& lm : doc.matrices) {
    ReportDocument sub = doc;
    sub.identities = (&lm == &doc.matrices.front()) ? doc.identities : std::vector<IdentityRecord>{};
    arr.push_back(detail::doc_to_json_one(sub, doc.section + "/" + lm.label, &lm.m));
  }
  return arr.dump(2) + "\n";
}

inline std::string emit_text(const ReportDocument& doc) {
  std::ostringstream os;
  os << "section: " << doc.section << " (k = " << doc.k << ")\n";
  for (const auto& lm : doc.matrices) {
    if (!lm.label.empty()) os << lm.label << ":\n";
    for (Eigen::Index i = 0; i < lm.m.rows(); ++i) {
      os << "  [";
      for (Eigen::Index j = 0; j < lm.m.cols(); ++j) {
        os << (j ? ", " : "") << to_string(lm.m(i, j));
      }
      os << "]\n";
    }
  }
  if (doc.has_numeric) {
    os << "numeric matrix (estimated error " << doc.estimated_error << "):\n";
    for (Eigen::Index i = 0; i < doc.numeric_matrix.rows(); ++i) {
      os << "  [";
      for (Eigen::Index j = 0; j < doc.numeric_matrix.cols(); ++j) {
        os << (j ? ", " : "") << detail::complex_to_string(doc.numeric_matrix(i, j));
      }
      os << "]\n";
    }
  }
  for (const auto& id : doc.identities) {
    os << (id.pass ? "[pass] " : "[FAIL] ") << id.name << " (" << id.paper_ref << ")\n";
  }
  return os.str();
}

inline std::string emit_latex(const ReportDocument& doc) {
  std::ostringstream os;
  os << "% section: " << doc.section << ", k = " << doc.k << "\n";
  os << "% displays use the transposed (row-action) orientation of the source convention\n";
  for (const auto& lm : doc.matrices) {
    if (!lm.label.empty()) os << "% " << lm.label << "\n";
    os << "\\begin{pmatrix}\n";
    for (Eigen::Index i = 0; i < lm.m.rows(); ++i) {
      for (Eigen::Index j = 0; j < lm.m.cols(); ++j) {
        os << to_string(lm.m(i, j)) << (j + 1 < lm.m.cols() ? " & " : "");
      }
      os << (i + 1 < lm.m.rows() ? " \\\\" : "") << "\n";
    }
    os << "\\end{pmatrix}\n";
  }
  for (const auto& id : doc.identities) {
    os << "% " << (id.pass ? "pass" : "FAIL") << ": " << id.name << " (" << id.paper_ref << ")\n";
  }
  return os.str();
}

inline std::string emit(const ReportDocument& doc, ReportFormat fmt) {
  switch (fmt) {
    case ReportFormat::json: return emit_json(doc);
    case ReportFormat::text: return emit_text(doc);
    case ReportFormat::latex: return emit_latex(doc);
  }
  return {};
}

}  // namespace hgs
