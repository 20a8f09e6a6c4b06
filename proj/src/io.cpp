#include "maxplus/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "maxplus/error.hpp"

namespace maxplus::io {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Returns false instead of throwing so callers can attach positions.
bool try_parse_rational(std::string_view tok, Rational& out) {
  if (tok.empty()) return false;
  bool negative = false;
  std::string_view body = tok;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return false;
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) return false;
    out = Rational(n, d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return false;
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      return false;
    mpz_class digits(std::string(whole) + std::string(frac), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    out = Rational(digits, scale);
  } else {
    if (!all_digits(body)) return false;
    out = Rational(mpz_class(std::string(body), 10));
  }
  out.canonicalize();
  if (negative) out = -out;
  return true;
}

bool try_parse_scalar(std::string_view tok, Scalar& out) {
  if (tok == "-inf" || tok == "*") {
    out = Scalar::bottom();
    return true;
  }
  Rational r;
  if (!try_parse_rational(tok, r)) return false;
  out = Scalar(r);
  return true;
}

}  // namespace

Rational parse_rational(std::string_view token) {
  Rational r;
  if (!try_parse_rational(token, r))
    throw ParseError(1, 1, "invalid number '" + std::string(token) + "'");
  return r;
}

Scalar parse_scalar(std::string_view token) {
  Scalar s;
  if (!try_parse_scalar(token, s))
    throw ParseError(1, 1, "invalid entry '" + std::string(token) + "'");
  return s;
}

MatrixDocument parse_matrix(std::string_view text, const std::string& source) {
  std::vector<std::vector<Scalar>> rows;
  std::size_t line_no = 0;
  std::size_t first_row_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::vector<Scalar> row;
    std::size_t c = 0;
    while (c < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[c]))) {
        ++c;
        continue;
      }
      std::size_t end = c;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      Scalar s;
      if (!try_parse_scalar(line.substr(c, end - c), s))
        throw ParseError(line_no, c + 1,
                         "invalid entry '" + std::string(line.substr(c, end - c)) + "'");
      row.push_back(std::move(s));
      c = end;
    }
    if (!row.empty()) {
      if (rows.empty()) {
        first_row_line = line_no;
      } else if (row.size() != rows.front().size()) {
        throw ParseError(line_no, 1,
                         "row has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rows.front().size()) + " (as on line " +
                             std::to_string(first_row_line) + ")");
      }
      rows.push_back(std::move(row));
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  if (rows.empty()) throw ParseError(line_no, 1, "no matrix rows");

  MatrixDocument doc;
  doc.source = source;
  doc.name = source.empty() ? "matrix" : std::filesystem::path(source).stem().string();
  doc.matrix = Matrix(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) doc.matrix(i, j) = rows[i][j];
  return doc;
}

MatrixDocument read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kInvalidInput, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str(), path);
}

std::string serialize_matrix(const Matrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += format_scalar(a(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_rational(const Rational& r) { return to_decimal_string(r); }

std::string format_scalar(const Scalar& s) {
  return s.is_bottom() ? "-inf" : format_rational(s.value());
}

std::string format_distance(const Distance& d) {
  return d.is_infinite() ? "inf" : format_rational(d.value());
}

std::string format_vector(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_scalar(v[i]);
  }
  return out + "]";
}

std::string format_matrix(const Matrix& a) {
  std::vector<std::size_t> width(a.cols(), 0);
  std::vector<std::vector<std::string>> cells(a.rows(), std::vector<std::string>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      cells[i][j] = format_scalar(a(i, j));
      width[j] = std::max(width[j], cells[i][j].size());
    }
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += "  ";
      out.append(width[j] - cells[i][j].size(), ' ');
      out += cells[i][j];
    }
    out += '\n';
  }
  return out;
}

Vector parse_vector(std::string_view text) {
  std::string cleaned(text);
  bool field_open = false;
  for (std::size_t c = 0; c < cleaned.size(); ++c) {
    const char ch = cleaned[c];
    if (ch == ',') {
      if (!field_open) throw ParseError(1, c + 1, "empty vector entry");
      field_open = false;
      cleaned[c] = ' ';
    } else if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '[' && ch != ']') {
      field_open = true;
    }
  }
  if (!field_open && cleaned.find_first_not_of(" \t\r\n[]") != std::string::npos)
    throw ParseError(1, cleaned.size(), "empty vector entry");
  std::size_t start = cleaned.find_first_not_of(" \t");
  if (start != std::string::npos && cleaned[start] == '[') cleaned[start] = ' ';
  std::size_t last = cleaned.find_last_not_of(" \t\r\n");
  if (last != std::string::npos && cleaned[last] == ']') cleaned[last] = ' ';

  std::vector<Scalar> entries;
  std::size_t c = 0;
  while (c < cleaned.size()) {
    if (std::isspace(static_cast<unsigned char>(cleaned[c]))) {
      ++c;
      continue;
    }
    std::size_t end = c;
    while (end < cleaned.size() && !std::isspace(static_cast<unsigned char>(cleaned[end]))) ++end;
    Scalar s;
    if (!try_parse_scalar(std::string_view(cleaned).substr(c, end - c), s))
      throw ParseError(1, c + 1, "invalid vector entry '" + cleaned.substr(c, end - c) + "'");
    entries.push_back(std::move(s));
    c = end;
  }
  if (entries.empty()) throw ParseError(1, 1, "empty vector");
  return Vector(std::move(entries));
}

CombinatorialType parse_type(std::string_view text) {
  CombinatorialType t;
  std::size_t c = 0;
  auto skip_space = [&] {
    while (c < text.size() && std::isspace(static_cast<unsigned char>(text[c]))) ++c;
  };
  for (;;) {
    skip_space();
    if (c >= text.size() || text[c] != '{') throw ParseError(1, c + 1, "expected '{'");
    ++c;
    std::vector<std::size_t> set;
    for (;;) {
      skip_space();
      if (c < text.size() && text[c] == '}') {
        ++c;
        break;
      }
      std::size_t end = c;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == c) throw ParseError(1, c + 1, "expected a column index");
      const unsigned long idx = std::stoul(std::string(text.substr(c, end - c)));
      if (idx == 0) throw ParseError(1, c + 1, "indices are 1-based");
      set.push_back(idx - 1);
      c = end;
      skip_space();
      if (c < text.size() && text[c] == ',') ++c;
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    t.sets.push_back(std::move(set));
    skip_space();
    if (c >= text.size()) break;
    if (text[c] != ';') throw ParseError(1, c + 1, "expected ';' between sets");
    ++c;
  }
  return t;
}

std::string format_index_set(const std::vector<std::size_t>& set) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(set[k] + 1);
  }
  return out + "}";
}

std::string format_type(const CombinatorialType& t) {
  std::string out;
  for (std::size_t j = 0; j < t.sets.size(); ++j) {
    if (j) out += ';';
    out += format_index_set(t.sets[j]);
  }
  return out;
}

std::string format_permutation(const Permutation& p) {
  const bool compact = p.size() <= 9;
  std::string out;
  for (auto cycle : p.cycles()) {
    if (cycle.size() >= 2) {
      const auto top = std::max_element(cycle.begin(), cycle.end());
      const auto offset = (top - cycle.begin() + static_cast<long>(cycle.size()) - 1) %
                          static_cast<long>(cycle.size());
      std::rotate(cycle.begin(), cycle.begin() + offset, cycle.end());
    }
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k && !compact) out += ' ';
      out += std::to_string(cycle[k] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation parse_permutation(std::string_view text, std::size_t n) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t c = 0;
  while (c < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[c]))) {
      ++c;
      continue;
    }
    if (text[c] != '(') throw ParseError(1, c + 1, "expected '('");
    const std::size_t close = text.find(')', c);
    if (close == std::string_view::npos) throw ParseError(1, c + 1, "unclosed cycle");
    const std::string_view body = text.substr(c + 1, close - c - 1);
    const bool separated = body.find_first_of(" ,") != std::string_view::npos;
    std::vector<std::size_t> cycle;
    if (separated) {
      std::string b(body);
      std::replace(b.begin(), b.end(), ',', ' ');
      std::istringstream in(b);
      std::string tok;
      while (in >> tok) {
        if (!all_digits(tok)) throw ParseError(1, c + 2, "invalid cycle element");
        cycle.push_back(std::stoul(tok));
      }
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw ParseError(1, c + 2, "invalid cycle element");
        cycle.push_back(static_cast<std::size_t>(ch - '0'));
      }
    }
    for (auto& e : cycle) {
      if (e == 0 || e > n) throw ParseError(1, c + 2, "cycle element out of range");
      --e;
    }
    cycles.push_back(std::move(cycle));
    c = close + 1;
  }
  try {
    return Permutation::from_cycles(n, cycles);
  } catch (const Error& e) {
    throw ParseError(1, 1, e.what());
  }
}

nlohmann::json to_json(const Scalar& s) { return format_scalar(s); }

nlohmann::json to_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : v) out.push_back(to_json(e));
  return out;
}

nlohmann::json to_json(const Matrix& a) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(to_json(a.row(i)));
  return out;
}

nlohmann::json to_json(const Distance& d) { return format_distance(d); }

}  // namespace maxplus::io
