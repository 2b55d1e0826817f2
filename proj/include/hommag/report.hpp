#ifndef HOMMAG_REPORT_HPP_
#define HOMMAG_REPORT_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hommag/enumerate.hpp"
#include "hommag/verify.hpp"

namespace hommag {

enum class ReportFormat { Json, Csv, Markdown, Text };

inline std::optional<ReportFormat> format_from_name(std::string_view name) {
  if (name == "json") {
    return ReportFormat::Json;
  }
  if (name == "csv") {
    return ReportFormat::Csv;
  }
  if (name == "markdown" || name == "md") {
    return ReportFormat::Markdown;
  }
  if (name == "text") {
    return ReportFormat::Text;
  }
  return std::nullopt;
}

// Field names for one class row, shared by every format.
inline constexpr std::array<const char*, 4> alpha_set_keys = {"wpe", "pe",
                                                              "pha", "ha"};

namespace detail {

inline std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) {
      out.push_back(' ');
    }
    out += words[i];
  }
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') {
      out += "\"\"";
    } else {
      out.push_back(ch);
    }
  }
  out.push_back('"');
  return out;
}

}  // namespace detail

inline nlohmann::ordered_json classification_to_json(
    const ClassificationReport& report) {
  nlohmann::ordered_json doc;
  doc["order"] = report.order;
  doc["totals_only"] = report.totals_only;
  doc["class_count"] = report.classes.size();
  doc["classes"] = nlohmann::ordered_json::array();
  for (const MagmaClass& c : report.classes) {
    nlohmann::ordered_json row;
    row["rep"] = encode(c.representative);
    row["members"] = c.members;
    for (std::size_t k = 0; k < alpha_set_keys.size(); ++k) {
      row[alpha_set_keys[k]] = c.alpha_sets[k];
    }
    row["passoc"] = c.partially_associative;
    row["assoc"] = c.associative;
    doc["classes"].push_back(std::move(row));
  }
  return doc;
}

inline ClassificationReport classification_from_json(
    const nlohmann::json& doc) {
  ClassificationReport report;
  report.order = doc.at("order").get<int>();
  report.totals_only = doc.value("totals_only", false);
  for (const auto& row : doc.at("classes")) {
    MagmaClass c{decode_table(row.at("rep").get<std::string>()),
                 row.at("members").get<std::vector<std::string>>(),
                 {},
                 row.at("passoc").get<bool>(),
                 row.at("assoc").get<bool>()};
    for (std::size_t k = 0; k < alpha_set_keys.size(); ++k) {
      c.alpha_sets[k] =
          row.at(alpha_set_keys[k]).get<std::vector<std::string>>();
    }
    report.classes.push_back(std::move(c));
  }
  return report;
}

inline std::string render_classification(const ClassificationReport& report,
                                         ReportFormat format) {
  if (format == ReportFormat::Json) {
    return classification_to_json(report).dump(2) + "\n";
  }
  std::string out;
  auto row_fields = [](const MagmaClass& c) {
    std::vector<std::string> fields;
    fields.push_back(encode(c.representative));
    fields.push_back(detail::join_words(c.members));
    for (const auto& set : c.alpha_sets) {
      fields.push_back(detail::join_words(set));
    }
    fields.push_back(c.partially_associative ? "true" : "false");
    fields.push_back(c.associative ? "true" : "false");
    return fields;
  };
  static constexpr std::array<const char*, 8> header = {
      "rep", "members", "wpe", "pe", "pha", "ha", "passoc", "assoc"};
  if (format == ReportFormat::Csv) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      out += (i ? "," : "") + std::string(header[i]);
    }
    out.push_back('\n');
    for (const MagmaClass& c : report.classes) {
      auto fields = row_fields(c);
      for (std::size_t i = 0; i < fields.size(); ++i) {
        out += (i ? "," : "") + detail::csv_field(fields[i]);
      }
      out.push_back('\n');
    }
    return out;
  }
  if (format == ReportFormat::Markdown) {
    out = "|";
    for (const char* h : header) {
      out += " " + std::string(h) + " |";
    }
    out += "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) {
      out += " --- |";
    }
    out.push_back('\n');
    for (const MagmaClass& c : report.classes) {
      out += "|";
      for (const std::string& f : row_fields(c)) {
        out += " " + (f.empty() ? std::string("(empty)") : f) + " |";
      }
      out.push_back('\n');
    }
    return out;
  }
  // Text: one compact line per class.
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const MagmaClass& c = report.classes[i];
    out += "(" + std::to_string(i + 1) + ") " + encode(c.representative) +
           ": members " + detail::join_words(c.members);
    out += c.partially_associative ? " passoc" : "";
    out += c.associative ? " assoc" : "";
    out.push_back('\n');
  }
  return out;
}

inline nlohmann::ordered_json verification_to_json(
    const VerificationOutcome& outcome) {
  nlohmann::ordered_json doc;
  doc["comparisons"] = outcome.items.size();
  doc["mismatches"] = outcome.mismatch_count();
  doc["items"] = nlohmann::ordered_json::array();
  for (const VerificationItem& item : outcome.items) {
    nlohmann::ordered_json row;
    row["section"] = item.section;
    row["subject"] = item.subject;
    row["match"] = item.match;
    row["computed"] = item.computed;
    row["claimed"] = item.claimed;
    if (!item.note.empty()) {
      row["note"] = item.note;
    }
    doc["items"].push_back(std::move(row));
  }
  return doc;
}

// Text rendering: every comparison on its own line, mismatches marked so
// they are easy to grep, then a one-line summary.
inline std::string render_verification(const VerificationOutcome& outcome,
                                       ReportFormat format) {
  if (format == ReportFormat::Json) {
    return verification_to_json(outcome).dump(2) + "\n";
  }
  if (format == ReportFormat::Markdown) {
    std::string out =
        "| section | subject | result | computed | claimed | note |\n"
        "| --- | --- | --- | --- | --- | --- |\n";
    for (const VerificationItem& item : outcome.items) {
      out += "| " + item.section + " | " + item.subject + " | " +
             (item.match ? "match" : "MISMATCH") + " | " + item.computed +
             " | " + item.claimed + " | " + item.note + " |\n";
    }
    return out;
  }
  if (format == ReportFormat::Csv) {
    std::string out = "section,subject,match,computed,claimed,note\n";
    for (const VerificationItem& item : outcome.items) {
      out += detail::csv_field(item.section) + "," +
             detail::csv_field(item.subject) + "," +
             (item.match ? "true" : "false") + "," +
             detail::csv_field(item.computed) + "," +
             detail::csv_field(item.claimed) + "," +
             detail::csv_field(item.note) + "\n";
    }
    return out;
  }
  std::string out;
  for (const VerificationItem& item : outcome.items) {
    out += "[" + item.section + "] " + item.subject + ": ";
    if (item.match) {
      out += item.note.empty() ? "match" : "match (" + item.note + ")";
      if (item.computed != item.claimed) {
        out += " computed=" + item.computed + " claimed=" + item.claimed;
      } else {
        out += " = " + item.computed;
      }
    } else {
      out += "MISMATCH computed=" + item.computed +
             " claimed=" + item.claimed;
      if (!item.note.empty()) {
        out += " (" + item.note + ")";
      }
    }
    out.push_back('\n');
  }
  out += "summary: " + std::to_string(outcome.items.size()) +
         " comparisons, " + std::to_string(outcome.mismatch_count()) +
         " mismatches\n";
  return out;
}

}  // namespace hommag

#endif  // HOMMAG_REPORT_HPP_
