// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#include "redumet/report_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "redumet/errors.hpp"

namespace redumet {

namespace {

constexpr int kSchemaVersion = 1;

std::string quote(const std::string& value) {
  return nlohmann::json(value).dump();
}

}  // namespace

std::string format_ratio(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string format_percent(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f%%", value * 100.0);
  return buf;
}

std::string render_report_json(const CorpusReport& report,
                               const RunConfig& config) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"schema_version\": " << kSchemaVersion << ",\n";
  out << "  \"config\": {\n";
  out << "    \"embeddings\": " << quote(config.embeddings) << ",\n";
  out << "    \"hyp\": " << quote(config.hyp) << ",\n";
  out << "    \"lowercase\": " << (config.lowercase ? "true" : "false")
      << ",\n";
  out << "    \"ref\": " << quote(config.ref) << ",\n";
  out << "    \"src\": " << quote(config.src) << ",\n";
  out << "    \"stopword_file\": " << quote(config.stopword_file) << ",\n";
  out << "    \"stopword_k_cjk\": " << config.stopword_k_cjk << ",\n";
  out << "    \"stopword_k_other\": " << config.stopword_k_other << ",\n";
  out << "    \"tau\": " << format_ratio(config.tau) << ",\n";
  out << "    \"train_file\": " << quote(config.train_file) << "\n";
  out << "  },\n";
  out << "  \"micro_crr\": " << format_ratio(report.micro_crr) << ",\n";
  out << "  \"micro_drr\": " << format_ratio(report.micro_drr) << ",\n";
  out << "  \"macro_crr\": " << format_ratio(report.macro_crr) << ",\n";
  out << "  \"macro_drr\": " << format_ratio(report.macro_drr) << ",\n";
  out << "  \"sentences\": [";
  for (std::size_t i = 0; i < report.sentence_reports.size(); ++i) {
    const SentenceReport& sent = report.sentence_reports[i];
    out << (i == 0 ? "\n" : ",\n");
    out << "    {\"id\": " << sent.id << ", \"length\": " << sent.length
        << ", \"cr_count\": " << sent.cr_count
        << ", \"dr_count\": " << sent.dr_count
        << ", \"crr\": " << format_ratio(sent.crr)
        << ", \"drr\": " << format_ratio(sent.drr) << ", \"flags\": [";
    for (std::size_t f = 0; f < sent.flags.size(); ++f) {
      const TokenFlag& flag = sent.flags[f];
      if (f > 0) out << ", ";
      out << "{\"position\": " << flag.position << ", \"category\": \""
          << to_string(flag.category) << "\", \"kind\": \""
          << to_string(flag.kind) << "\", \"partner\": " << flag.partner
          << ", \"exempted\": " << (flag.exempted ? "true" : "false") << "}";
    }
    out << "]}";
  }
  out << (report.sentence_reports.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

std::string render_report_tsv(const CorpusReport& report) {
  std::ostringstream out;
  out << "# id\tlength\tcr_count\tdr_count\tcrr\tdrr\n";
  for (const SentenceReport& sent : report.sentence_reports) {
    out << sent.id << '\t' << sent.length << '\t' << sent.cr_count << '\t'
        << sent.dr_count << '\t' << format_ratio(sent.crr) << '\t'
        << format_ratio(sent.drr) << '\n';
  }
  return out.str();
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open output file for writing: " + temp);
    }
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(temp, ec);
      throw IoError("write failure on output file: " + temp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw IoError("cannot move report into place at: " + path);
  }
}

void write_report_json(const CorpusReport& report, const RunConfig& config,
                       const std::string& path) {
  atomic_write(path, render_report_json(report, config));
}

void write_report_tsv(const CorpusReport& report, const std::string& path) {
  atomic_write(path, render_report_tsv(report));
}

CorpusReport read_report_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open report file: " + path);
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("schema_version") ||
      !doc["schema_version"].is_number_integer() ||
      doc["schema_version"].get<int>() != kSchemaVersion) {
    throw FormatError(path + ": unsupported or missing schema_version");
  }
  try {
    CorpusReport report;
    report.micro_crr = doc.at("micro_crr").get<double>();
    report.micro_drr = doc.at("micro_drr").get<double>();
    report.macro_crr = doc.at("macro_crr").get<double>();
    report.macro_drr = doc.at("macro_drr").get<double>();
    for (const nlohmann::json& sent : doc.at("sentences")) {
      SentenceReport sr;
      sr.id = sent.at("id").get<std::size_t>();
      sr.length = sent.at("length").get<std::size_t>();
      sr.cr_count = sent.at("cr_count").get<std::size_t>();
      sr.dr_count = sent.at("dr_count").get<std::size_t>();
      sr.crr = sent.at("crr").get<double>();
      sr.drr = sent.at("drr").get<double>();
      for (const nlohmann::json& item : sent.at("flags")) {
        TokenFlag flag;
        flag.position = item.at("position").get<std::size_t>();
        auto category =
            category_from_string(item.at("category").get<std::string>());
        auto kind = kind_from_string(item.at("kind").get<std::string>());
        if (!category || !kind) {
          throw FormatError(path + ": unknown flag category or kind");
        }
        flag.category = *category;
        flag.kind = *kind;
        flag.partner = item.at("partner").get<std::size_t>();
        flag.exempted = item.at("exempted").get<bool>();
        sr.flags.push_back(flag);
      }
      report.sentence_reports.push_back(std::move(sr));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": malformed report: " + e.what());
  }
}

}  // namespace redumet
