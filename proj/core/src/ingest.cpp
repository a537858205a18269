#include "elastic/ingest.hpp"

#include "elastic/errors.hpp"
#include "elastic/numeric_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace elastic {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

bool is_separator(char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r'; }

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    ++number;

    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && is_separator(raw[pos])) ++pos;
      if (pos >= raw.size()) break;
      if (line.tokens.empty() && raw[pos] == '#') break;
      const std::size_t begin = pos;
      while (pos < raw.size() && !is_separator(raw[pos])) ++pos;
      line.tokens.push_back({raw.substr(begin, pos - begin), begin + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

double number_at(const Line& line, const Token& tok) {
  const auto v = parse_double(tok.text);
  if (!v) throw ParseError(line.number, tok.column, "non-numeric token '" + std::string(tok.text) + "'");
  return *v;
}

bool all_numeric(const Line& line) {
  return std::all_of(line.tokens.begin(), line.tokens.end(),
                     [](const Token& t) { return parse_double(t.text).has_value(); });
}

void require_min_points(std::size_t n, const Line& last) {
  if (n < 3) {
    throw ParseError(last.number, 1,
                     "matrix describes " + std::to_string(n) + " points; at least 3 are required");
  }
}

bool is_triangular_profile(const std::vector<Line>& lines) {
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].tokens.size() != r + 1) return false;
  }
  return true;
}

bool looks_like_diagonal(const std::vector<Line>& lines, MatrixKind kind) {
  if (lines.size() < 2) return false;
  std::vector<double> last;
  double off_max = -std::numeric_limits<double>::infinity();
  for (const Line& line : lines) {
    for (std::size_t c = 0; c < line.tokens.size(); ++c) {
      const auto v = parse_double(line.tokens[c].text);
      if (!v) return false;
      if (c + 1 == line.tokens.size()) {
        last.push_back(*v);
      } else {
        off_max = std::max(off_max, *v);
      }
    }
  }
  if (!std::all_of(last.begin(), last.end(), [&](double v) { return v == last.front(); })) return false;
  return kind == MatrixKind::dissimilarity ? last.front() == 0.0 : last.front() >= off_max;
}

RawMatrix parse_triangle(const std::vector<Line>& lines, bool with_diagonal, MatrixKind kind) {
  RawMatrix raw;
  raw.kind = kind;
  raw.n = with_diagonal ? lines.size() : lines.size() + 1;
  raw.values = Matrix::Zero(static_cast<Eigen::Index>(raw.n), static_cast<Eigen::Index>(raw.n));
  for (std::size_t r = 0; r < lines.size(); ++r) {
    const Line& line = lines[r];
    const std::size_t expected = r + 1;
    if (line.tokens.size() != expected) {
      const std::size_t col = line.tokens.size() > expected ? line.tokens[expected].column
                                                            : line.tokens.back().column;
      throw ParseError(line.number, col,
                       "triangle row " + std::to_string(r + 1) + " should hold " +
                           std::to_string(expected) + " entries, found " +
                           std::to_string(line.tokens.size()));
    }
    const auto row = static_cast<Eigen::Index>(with_diagonal ? r : r + 1);
    for (std::size_t c = 0; c < line.tokens.size(); ++c) {
      const double v = number_at(line, line.tokens[c]);
      const auto col = static_cast<Eigen::Index>(c);
      raw.values(row, col) = v;
      raw.values(col, row) = v;
    }
  }
  require_min_points(raw.n, lines.back());
  return raw;
}

RawMatrix parse_full(const std::vector<Line>& lines, MatrixKind kind) {
  RawMatrix raw;
  raw.kind = kind;
  std::size_t first = 0;
  const std::size_t width = lines.front().tokens.size();
  const bool header = !all_numeric(lines.front()) || lines.size() == width + 1;
  if (header) {
    for (const Token& t : lines.front().tokens) raw.labels.emplace_back(t.text);
    first = 1;
  }
  const std::size_t rows = lines.size() - first;
  if (rows != width) {
    const Line& where = lines.back();
    throw ParseError(where.number, 1,
                     "full matrix needs " + std::to_string(width) + " rows of " +
                         std::to_string(width) + " entries, found " + std::to_string(rows) + " rows");
  }
  raw.n = width;
  raw.values = Matrix::Zero(static_cast<Eigen::Index>(raw.n), static_cast<Eigen::Index>(raw.n));
  for (std::size_t r = 0; r < rows; ++r) {
    const Line& line = lines[first + r];
    if (line.tokens.size() != width) {
      const std::size_t col = line.tokens.size() > width ? line.tokens[width].column
                                                         : line.tokens.back().column;
      throw ParseError(line.number, col,
                       "ragged row: expected " + std::to_string(width) + " entries, found " +
                           std::to_string(line.tokens.size()));
    }
    for (std::size_t c = 0; c < width; ++c) {
      raw.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          number_at(line, line.tokens[c]);
    }
  }
  require_min_points(raw.n, lines.back());
  symmetrize(raw);
  return raw;
}

}  // namespace

bool RawMatrix::is_symmetric() const { return values == values.transpose(); }

RawMatrix parse_matrix(std::string_view text, MatrixFormat format, MatrixKind kind) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "no matrix entries found");

  if (format == MatrixFormat::automatic) {
    if (is_triangular_profile(lines) && lines.size() > 1) {
      format = looks_like_diagonal(lines, kind) ? MatrixFormat::triangle_diag : MatrixFormat::triangle;
    } else {
      format = MatrixFormat::csv_full;
    }
  }
  switch (format) {
    case MatrixFormat::triangle:
      return parse_triangle(lines, false, kind);
    case MatrixFormat::triangle_diag:
      return parse_triangle(lines, true, kind);
    case MatrixFormat::csv_full:
    case MatrixFormat::automatic:
      break;
  }
  return parse_full(lines, kind);
}

void symmetrize(RawMatrix& raw) {
  if (raw.values == raw.values.transpose()) return;
  double worst = 0.0;
  for (Eigen::Index i = 0; i < raw.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < i; ++j) worst = std::max(worst, std::abs(raw.values(i, j) - raw.values(j, i)));
  }
  const Matrix sym = 0.5 * (raw.values + raw.values.transpose());
  raw.values = sym;
  raw.warnings.push_back("asymmetric input symmetrized as (a_ij + a_ji)/2; largest |a_ij - a_ji| = " +
                         format_shortest(worst));
}

DissimilarityData to_dissimilarities(const RawMatrix& raw, Transform transform,
                                     std::optional<RawMatrix> weights) {
  const std::size_t n = raw.n;
  if (n < 3) throw ValidationError("need at least 3 points, got " + std::to_string(n));
  RawMatrix source = raw;
  symmetrize(source);

  double reference = 0.0;
  if (transform == Transform::max_minus) reference = source.values.maxCoeff();

  std::vector<double> delta;
  delta.reserve(pair_count(n));
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t i = j + 1; i < n; ++i) {
      const double a = source.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      double d = a;
      if (transform == Transform::one_minus) d = 1.0 - a;
      if (transform == Transform::max_minus) d = reference - a;
      if (!(d > 0.0)) {
        const std::string name = source.labels.size() == n
                                     ? " (" + source.labels[j] + ", " + source.labels[i] + ")"
                                     : "";
        throw ZeroDissimilarityError(
            pair_index(n, i, j),
            "dissimilarity for pair (" + std::to_string(j + 1) + ", " + std::to_string(i + 1) + ")" +
                name + " is " + format_shortest(d) + " after " + std::string(to_string(transform)) +
                " transform; it must be strictly positive");
      }
      delta.push_back(d);
    }
  }

  std::vector<double> w;
  if (weights) {
    if (weights->n != n) {
      throw ValidationError("weight matrix has " + std::to_string(weights->n) +
                            " points, dissimilarities have " + std::to_string(n));
    }
    symmetrize(*weights);
    w.reserve(delta.size());
    for (std::size_t j = 0; j + 1 < n; ++j) {
      for (std::size_t i = j + 1; i < n; ++i) {
        w.push_back(weights->values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      }
    }
  }
  std::vector<std::string> labels = source.labels.size() == n ? source.labels : std::vector<std::string>{};
  return DissimilarityData(n, std::move(delta), std::move(w), std::move(labels));
}

std::optional<MatrixFormat> parse_format_name(std::string_view name) {
  if (name == "csv" || name == "csv-full") return MatrixFormat::csv_full;
  if (name == "triangle" || name == "triangle-rows") return MatrixFormat::triangle;
  if (name == "triangle-diag") return MatrixFormat::triangle_diag;
  if (name == "auto") return MatrixFormat::automatic;
  return std::nullopt;
}

std::optional<Transform> parse_transform_name(std::string_view name) {
  if (name == "identity") return Transform::identity;
  if (name == "one-minus") return Transform::one_minus;
  if (name == "max-minus") return Transform::max_minus;
  return std::nullopt;
}

std::string_view to_string(Transform t) {
  switch (t) {
    case Transform::identity: return "identity";
    case Transform::one_minus: return "one-minus";
    case Transform::max_minus: return "max-minus";
  }
  return "unknown";
}

std::string_view to_string(MatrixFormat f) {
  switch (f) {
    case MatrixFormat::csv_full: return "csv";
    case MatrixFormat::triangle: return "triangle";
    case MatrixFormat::triangle_diag: return "triangle-diag";
    case MatrixFormat::automatic: return "auto";
  }
  return "unknown";
}

std::string write_dissimilarities(const DissimilarityData& data) {
  std::string out = "pair_i,pair_j,delta,weight\n";
  const std::size_t n = data.n();
  for (std::size_t k = 0; k < data.size(); ++k) {
    const Pair p = pair_at(n, k);
    out += std::to_string(p.col + 1) + ',' + std::to_string(p.row + 1) + ',' +
           format_shortest(data.delta()[k]) + ',' + format_shortest(data.weights()[k]) + '\n';
  }
  return out;
}

DissimilarityData read_dissimilarities(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "no rows found");
  std::size_t first = 0;
  if (!all_numeric(lines.front())) first = 1;

  struct Row {
    std::size_t i, j;
    double delta, weight;
    std::size_t line;
  };
  std::vector<Row> rows;
  std::size_t n = 0;
  for (std::size_t r = first; r < lines.size(); ++r) {
    const Line& line = lines[r];
    if (line.tokens.size() != 4 && line.tokens.size() != 3) {
      throw ParseError(line.number, 1, "expected pair_i,pair_j,delta[,weight]");
    }
    const double i = number_at(line, line.tokens[0]);
    const double j = number_at(line, line.tokens[1]);
    if (i < 1 || j < 1 || i != std::floor(i) || j != std::floor(j) || i == j) {
      throw ParseError(line.number, line.tokens[0].column, "invalid pair indices");
    }
    const double w = line.tokens.size() == 4 ? number_at(line, line.tokens[3]) : 1.0;
    const auto lo = static_cast<std::size_t>(std::min(i, j));
    const auto hi = static_cast<std::size_t>(std::max(i, j));
    rows.push_back({lo, hi, number_at(line, line.tokens[2]), w, line.number});
    n = std::max(n, hi);
  }
  if (n < 3) throw ParseError(lines.back().number, 1, "need at least 3 points");

  const std::size_t m = pair_count(n);
  std::vector<double> delta(m, 0.0);
  std::vector<double> weights(m, 0.0);
  std::vector<bool> seen(m, false);
  for (const Row& row : rows) {
    const std::size_t k = pair_index(n, row.j - 1, row.i - 1);
    if (seen[k]) throw ParseError(row.line, 1, "duplicate pair");
    seen[k] = true;
    delta[k] = row.delta;
    weights[k] = row.weight;
  }
  if (rows.size() != m) {
    throw ValidationError("pair list covers " + std::to_string(rows.size()) + " of " +
                          std::to_string(m) + " pairs");
  }
  return DissimilarityData(n, std::move(delta), std::move(weights));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace elastic
