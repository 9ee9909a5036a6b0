// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#include "redumet/corpus.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "redumet/errors.hpp"
#include "redumet/text_util.hpp"

namespace redumet {

Sentence tokenize_line(std::string_view line) {
  Sentence sentence;
  for (std::string_view piece : split_whitespace(line)) {
    sentence.emplace_back(std::string(piece));
  }
  return sentence;
}

namespace {

std::vector<Sentence> read_sentence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open corpus file: " + path);
  }
  std::vector<Sentence> sentences;
  std::string line;
  while (std::getline(in, line)) {
    sentences.push_back(tokenize_line(line));
  }
  if (in.bad()) {
    throw IoError("read failure on corpus file: " + path);
  }
  return sentences;
}

std::size_t parse_index_field(std::string_view field, const std::string& name,
                              std::size_t line_no, const char* what) {
  std::size_t value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    std::ostringstream msg;
    msg << name << ":" << line_no << ": bad " << what << " '" << field << "'";
    throw ParseError(msg.str());
  }
  return value;
}

}  // namespace

std::vector<EvalInstance> load_parallel(const std::string& src_path,
                                        const std::string& hyp_path,
                                        const std::string& ref_path) {
  std::vector<Sentence> src = read_sentence_file(src_path);
  std::vector<Sentence> hyp = read_sentence_file(hyp_path);
  std::vector<Sentence> ref = read_sentence_file(ref_path);
  if (src.size() != hyp.size() || src.size() != ref.size()) {
    std::ostringstream msg;
    msg << "line count mismatch: " << src_path << " has " << src.size()
        << ", " << hyp_path << " has " << hyp.size() << ", " << ref_path
        << " has " << ref.size();
    throw LineCountMismatch(msg.str());
  }
  std::vector<EvalInstance> instances;
  instances.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    instances.push_back(EvalInstance{i, std::move(src[i]), std::move(hyp[i]),
                                     std::move(ref[i])});
  }
  return instances;
}

std::vector<AnnotationTuple> parse_annotations(std::istream& in,
                                               const std::string& name) {
  std::vector<AnnotationTuple> tuples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    std::string_view view(line);
    while (true) {
      std::size_t tab = view.find('\t', start);
      if (tab == std::string_view::npos) {
        fields.push_back(view.substr(start));
        break;
      }
      fields.push_back(view.substr(start, tab - start));
      start = tab + 1;
    }
    if (fields.size() != 5) {
      std::ostringstream msg;
      msg << name << ":" << line_no << ": expected 5 tab-separated fields, got "
          << fields.size();
      throw ParseError(msg.str());
    }

    AnnotationTuple tuple;
    tuple.sentence_id =
        parse_index_field(fields[0], name, line_no, "sentence id");
    tuple.pos_a = parse_index_field(fields[1], name, line_no, "position");
    tuple.pos_b = parse_index_field(fields[2], name, line_no, "position");
    auto type = type_from_code(fields[3]);
    if (!type) {
      std::ostringstream msg;
      msg << name << ":" << line_no << ": unknown error type '" << fields[3]
          << "' (expected CR|CS|DR|DS)";
      throw ParseError(msg.str());
    }
    tuple.err_type = *type;
    tuple.system = std::string(fields[4]);
    try {
      tuple.validate();
    } catch (const InvariantViolation& e) {
      std::ostringstream msg;
      msg << name << ":" << line_no << ": " << e.what();
      throw InvariantViolation(msg.str());
    }
    tuples.push_back(std::move(tuple));
  }
  if (in.bad()) {
    throw IoError("read failure on annotation file: " + name);
  }
  return tuples;
}

std::vector<AnnotationTuple> parse_annotations(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open annotation file: " + path);
  }
  return parse_annotations(in, path);
}

void serialize_annotations(const std::vector<AnnotationTuple>& tuples,
                           std::ostream& out) {
  out << "# sentence_id\tpos_a\tpos_b\ttype\tsystem\n";
  for (const AnnotationTuple& t : tuples) {
    out << t.sentence_id << '\t' << t.pos_a << '\t' << t.pos_b << '\t'
        << to_code(t.err_type) << '\t' << t.system << '\n';
  }
}

}  // namespace redumet
