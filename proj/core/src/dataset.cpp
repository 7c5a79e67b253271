#include "rrlearn/dataset.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "rrlearn/errors.hpp"

namespace rrl {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  for (auto& tok : out) {
    std::size_t a = tok.find_first_not_of(" \t");
    std::size_t b = tok.find_last_not_of(" \t");
    tok = (a == std::string::npos) ? std::string() : tok.substr(a, b - a + 1);
  }
  return out;
}

}  // namespace

LabeledDataset::LabeledDataset(int dimension, std::vector<std::string> alphabet,
                               std::vector<LabeledPoint> points)
    : dim_(dimension), alphabet_(std::move(alphabet)), points_(std::move(points)) {
  require(dim_ >= 1, ErrorCode::DimensionMismatch, "dimension must be >= 1");
  require(alphabet_.size() >= 2, ErrorCode::AlphabetUnsupported, "alphabet needs >= 2 labels");
  std::set<std::string> seen;
  for (const auto& tok : alphabet_) {
    require(!tok.empty(), ErrorCode::AlphabetUnsupported, "empty label token");
    require(seen.insert(tok).second, ErrorCode::AlphabetUnsupported,
            "duplicate label token '" + tok + "'");
  }
  for (const auto& p : points_) {
    require(static_cast<int>(p.x.size()) == dim_, ErrorCode::DimensionMismatch,
            "point dimension mismatch");
    require(p.label >= 0 && p.label < static_cast<int>(alphabet_.size()),
            ErrorCode::Internal, "label index out of range");
  }
  if (dim_ == 1) {
    std::stable_sort(points_.begin(), points_.end(),
                     [](const LabeledPoint& a, const LabeledPoint& b) { return a.x[0] < b.x[0]; });
  }
}

int LabeledDataset::label_index(const std::string& token) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    if (alphabet_[i] == token) return static_cast<int>(i);
  return -1;
}

const BigRat& LabeledDataset::x1(int i) const {
  require(dim_ == 1, ErrorCode::DimensionMismatch, "x1() on multi-dimensional dataset");
  return point(i).x[0];
}

std::vector<BigRat> LabeledDataset::coords1d() const {
  require(dim_ == 1, ErrorCode::DimensionMismatch, "coords1d() on multi-dimensional dataset");
  std::vector<BigRat> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.x[0]);
  return out;
}

LabeledDataset LabeledDataset::with_appended(const std::vector<LabeledPoint>& extra) const {
  std::vector<LabeledPoint> pts = points_;
  pts.insert(pts.end(), extra.begin(), extra.end());
  return LabeledDataset(dim_, alphabet_, std::move(pts));
}

LabeledDataset LabeledDataset::read_csv(std::istream& in,
                                        const std::vector<std::string>& declared_alphabet) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), ErrorCode::Parse, "empty CSV: missing header");
  auto header = split_csv_line(line);
  require(header.size() >= 2, ErrorCode::Parse, "CSV header needs x1,...,xd,label");
  int dim = static_cast<int>(header.size()) - 1;
  for (int i = 0; i < dim; ++i) {
    std::string want = "x" + std::to_string(i + 1);
    require(header[static_cast<std::size_t>(i)] == want, ErrorCode::Parse,
            "CSV header column " + std::to_string(i + 1) + " must be '" + want + "'");
  }
  require(header.back() == "label", ErrorCode::Parse, "CSV header must end with 'label'");

  std::vector<std::string> alphabet = declared_alphabet;
  auto find_label = [&alphabet](const std::string& tok) {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
      if (alphabet[i] == tok) return static_cast<int>(i);
    return -1;
  };

  std::vector<LabeledPoint> points;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto cells = split_csv_line(line);
    require(cells.size() == header.size(), ErrorCode::Parse,
            "CSV line " + std::to_string(lineno) + ": expected " +
                std::to_string(header.size()) + " cells");
    LabeledPoint p;
    p.x.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      try {
        p.x.push_back(parse_rational(cells[static_cast<std::size_t>(i)]));
      } catch (const Error&) {
        fail(ErrorCode::Parse, "CSV line " + std::to_string(lineno) + ": bad coordinate '" +
                                   cells[static_cast<std::size_t>(i)] + "'");
      }
    }
    const std::string& tok = cells.back();
    require(!tok.empty(), ErrorCode::Parse, "CSV line " + std::to_string(lineno) + ": empty label");
    int idx = find_label(tok);
    if (idx < 0) {
      require(declared_alphabet.empty(), ErrorCode::Parse,
              "CSV line " + std::to_string(lineno) + ": label '" + tok +
                  "' not in declared alphabet");
      alphabet.push_back(tok);
      idx = static_cast<int>(alphabet.size()) - 1;
    }
    p.label = idx;
    points.push_back(std::move(p));
  }

  if (alphabet.size() == 1) {
    // binary modules need a second label; the +/- pair is the only convention
    // we silently complete
    if (alphabet[0] == "+") alphabet.push_back("-");
    else if (alphabet[0] == "-") alphabet.push_back("+");
    else
      fail(ErrorCode::AlphabetUnsupported,
           "single-label CSV with token '" + alphabet[0] + "': declare the alphabet explicitly");
  }
  require(alphabet.size() >= 2, ErrorCode::AlphabetUnsupported, "CSV holds no labels");
  return LabeledDataset(dim, std::move(alphabet), std::move(points));
}

void LabeledDataset::write_csv(std::ostream& out) const {
  for (int i = 0; i < dim_; ++i) out << "x" << (i + 1) << ",";
  out << "label\n";
  for (const auto& p : points_) {
    for (const auto& c : p.x) {
      auto dec = rational_to_decimal(c);
      out << (dec ? *dec : rational_to_string(c)) << ",";
    }
    out << token(p.label) << "\n";
  }
}

}  // namespace rrl
