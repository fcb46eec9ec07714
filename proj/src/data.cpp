#include <udlad/data.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace udlad {

namespace {

std::vector<Index> sample_without_replacement(Index population, Index k,
                                              std::mt19937_64& rng) {
  std::vector<Index> pool(static_cast<std::size_t>(population));
  std::iota(pool.begin(), pool.end(), Index{0});
  for (Index t = 0; t < k; ++t) {
    std::uniform_int_distribution<Index> pick(t, population - 1);
    std::swap(pool[static_cast<std::size_t>(t)],
              pool[static_cast<std::size_t>(pick(rng))]);
  }
  pool.resize(static_cast<std::size_t>(k));
  return pool;
}

}  // namespace

SynthData gen_synthetic(const SynthConfig& cfg) {
  if (cfg.m < 1 || cfg.n_inlier < 1 || cfg.n_outlier < 1)
    throw data_error("gen_synthetic: dimensions must be positive");
  if (cfg.overlap > std::min(cfg.n_inlier, cfg.n_outlier))
    throw data_error("gen_synthetic: overlap exceeds the smaller dictionary");
  if (cfg.s_gen > cfg.n_inlier || cfg.s_gen > cfg.n_outlier)
    throw data_error("gen_synthetic: s_gen exceeds a generator dictionary size");
  if (cfg.s_gen < 1 || cfg.N_train < 1 || cfg.N_test_inliers < 0)
    throw data_error("gen_synthetic: invalid counts");
  if (cfg.outlier_fraction < 0.0 || cfg.outlier_fraction >= 1.0)
    throw data_error("gen_synthetic: outlier_fraction must be in [0, 1)");

  std::mt19937_64 rng(static_cast<std::uint64_t>(cfg.seed));
  std::normal_distribution<double> gauss(0.0, 1.0);

  const auto random_unit_atom = [&](Vec& a) {
    double norm = 0.0;
    do {
      for (Index i = 0; i < cfg.m; ++i) a[i] = gauss(rng);
      norm = a.norm();
    } while (norm == 0.0);
    a /= norm;
  };

  SynthData out;
  out.inlier_atoms.resize(cfg.m, cfg.n_inlier);
  out.outlier_atoms.resize(cfg.m, cfg.n_outlier);
  Vec atom(cfg.m);
  for (Index j = 0; j < cfg.n_inlier; ++j) {
    random_unit_atom(atom);
    out.inlier_atoms.col(j) = atom;
  }
  for (Index j = 0; j < cfg.n_outlier; ++j) {
    if (j < cfg.overlap) {
      out.outlier_atoms.col(j) = out.inlier_atoms.col(j);
    } else {
      random_unit_atom(atom);
      out.outlier_atoms.col(j) = atom;
    }
  }

  const auto make_signal = [&](const Mat& atoms, Vec& y,
                               std::vector<Index>& support) {
    support = sample_without_replacement(atoms.cols(), cfg.s_gen, rng);
    y.setZero();
    for (Index idx : support) y += gauss(rng) * atoms.col(idx);
  };

  const Index n_out = static_cast<Index>(std::llround(
      cfg.outlier_fraction / (1.0 - cfg.outlier_fraction) *
      static_cast<double>(cfg.N_test_inliers)));

  Vec y(cfg.m);
  std::vector<Index> support;

  out.train.signals.resize(cfg.m, cfg.N_train);
  out.train.name = "synth-train";
  for (Index j = 0; j < cfg.N_train; ++j) {
    make_signal(out.inlier_atoms, y, support);
    out.train.signals.col(j) = y;
    out.train_supports.push_back(support);
  }

  const Index n_test = cfg.N_test_inliers + n_out;
  if (n_test < 1) throw data_error("gen_synthetic: empty test set");
  out.test.signals.resize(cfg.m, n_test);
  out.test.name = "synth-test";
  std::vector<std::uint8_t> labels(static_cast<std::size_t>(n_test), 0);
  for (Index j = 0; j < cfg.N_test_inliers; ++j) {
    make_signal(out.inlier_atoms, y, support);
    out.test.signals.col(j) = y;
    out.test_supports.push_back(support);
  }
  for (Index j = 0; j < n_out; ++j) {
    make_signal(out.outlier_atoms, y, support);
    out.test.signals.col(cfg.N_test_inliers + j) = y;
    out.test_supports.push_back(support);
    labels[static_cast<std::size_t>(cfg.N_test_inliers + j)] = 1;
  }
  out.test.labels = std::move(labels);
  return out;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_number(const std::string& field, std::size_t row, std::size_t col) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end > begin && (*(end - 1) == ' ' || *(end - 1) == '\t')) --end;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw data_error("row " + std::to_string(row) + ", column " +
                     std::to_string(col) + ": non-numeric field '" + field + "'");
  return value;
}

std::string path_stem(const std::string& path) {
  const auto slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

}  // namespace

Dataset load_csv(const std::string& path, bool has_header,
                 const std::optional<std::string>& label_column) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open '" + path + "'");

  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
      lines.push_back(line);
  }
  if (lines.empty()) throw data_error("'" + path + "' is empty");

  std::vector<std::string> header;
  std::size_t first_data = 0;
  if (has_header) {
    header = split_fields(lines[0]);
    first_data = 1;
    if (first_data >= lines.size())
      throw data_error("'" + path + "' has a header but no data rows");
  }

  const std::size_t width = split_fields(lines[first_data]).size();
  if (width == 0) throw data_error("'" + path + "' has empty rows");

  std::optional<std::size_t> label_idx;
  if (label_column) {
    // Accept a 0-based column index or a header name.
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(
        label_column->data(), label_column->data() + label_column->size(), idx);
    if (ec == std::errc{} && ptr == label_column->data() + label_column->size()) {
      label_idx = idx;
    } else {
      if (!has_header)
        throw data_error("label column '" + *label_column +
                         "' needs a header row to resolve by name");
      auto it = std::find(header.begin(), header.end(), *label_column);
      if (it == header.end())
        throw data_error("label column '" + *label_column + "' not found in header");
      label_idx = static_cast<std::size_t>(it - header.begin());
    }
    if (*label_idx >= width)
      throw data_error("label column index " + std::to_string(*label_idx) +
                       " out of range for " + std::to_string(width) + " columns");
  }

  const std::size_t n_rows = lines.size() - first_data;
  const std::size_t n_features = width - (label_idx ? 1 : 0);
  if (n_features == 0) throw data_error("'" + path + "' has no feature columns");

  Dataset out;
  out.signals.resize(static_cast<Index>(n_features), static_cast<Index>(n_rows));
  std::vector<std::uint8_t> labels;
  if (label_idx) labels.resize(n_rows, 0);

  for (std::size_t r = 0; r < n_rows; ++r) {
    const auto fields = split_fields(lines[first_data + r]);
    const std::size_t file_row = first_data + r + 1;  // 1-based, header included
    if (fields.size() != width)
      throw data_error("row " + std::to_string(file_row) + ": expected " +
                       std::to_string(width) + " fields, got " +
                       std::to_string(fields.size()));
    Index f = 0;
    for (std::size_t c = 0; c < width; ++c) {
      const double v = parse_number(fields[c], file_row, c + 1);
      if (label_idx && c == *label_idx) {
        if (v != 0.0 && v != 1.0)
          throw data_error("row " + std::to_string(file_row) + ", column " +
                           std::to_string(c + 1) + ": label must be 0 or 1");
        labels[r] = v == 1.0 ? 1 : 0;
      } else {
        out.signals(f++, static_cast<Index>(r)) = v;
      }
    }
  }

  if (!out.signals.allFinite())
    throw data_error("'" + path + "' contains non-finite values");
  if (label_idx) out.labels = std::move(labels);
  out.name = path_stem(path);
  return out;
}

void write_csv(const Dataset& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw data_error("cannot write '" + path + "'");

  for (Index f = 0; f < data.dim(); ++f) {
    if (f > 0) out << ',';
    out << 'f' << f;
  }
  if (data.labels) out << ",label";
  out << '\n';

  char buf[64];
  for (Index j = 0; j < data.count(); ++j) {
    for (Index f = 0; f < data.dim(); ++f) {
      if (f > 0) out << ',';
      std::snprintf(buf, sizeof buf, "%.17g", data.signals(f, j));
      out << buf;
    }
    if (data.labels)
      out << ',' << static_cast<int>((*data.labels)[static_cast<std::size_t>(j)]);
    out << '\n';
  }
  if (!out) throw data_error("error while writing '" + path + "'");
}

Split split_for_ad(const Dataset& data, double train_inlier_fraction,
                   std::int64_t seed) {
  if (!data.labels) throw data_error("split_for_ad: dataset has no labels");
  if (!(train_inlier_fraction > 0.0 && train_inlier_fraction < 1.0))
    throw data_error("split_for_ad: train fraction must be in (0, 1)");

  std::vector<Index> inliers;
  for (Index j = 0; j < data.count(); ++j)
    if (!(*data.labels)[static_cast<std::size_t>(j)]) inliers.push_back(j);
  if (inliers.empty()) throw data_error("split_for_ad: dataset has no inliers");

  const Index n_inl = static_cast<Index>(inliers.size());
  Index train_count = static_cast<Index>(
      std::llround(train_inlier_fraction * static_cast<double>(n_inl)));
  train_count = std::clamp<Index>(train_count, 1, n_inl);

  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  std::shuffle(inliers.begin(), inliers.end(), rng);
  std::vector<char> in_train(static_cast<std::size_t>(data.count()), 0);
  for (Index t = 0; t < train_count; ++t)
    in_train[static_cast<std::size_t>(inliers[static_cast<std::size_t>(t)])] = 1;

  Split split;
  split.train.signals.resize(data.dim(), train_count);
  split.train.name = data.name;
  split.test.signals.resize(data.dim(), data.count() - train_count);
  split.test.name = data.name;
  std::vector<std::uint8_t> test_labels;

  Index a = 0, b = 0;
  for (Index j = 0; j < data.count(); ++j) {
    if (in_train[static_cast<std::size_t>(j)]) {
      split.train.signals.col(a++) = data.signals.col(j);
    } else {
      split.test.signals.col(b) = data.signals.col(j);
      test_labels.push_back((*data.labels)[static_cast<std::size_t>(j)]);
      ++b;
    }
  }
  split.test.labels = std::move(test_labels);
  return split;
}

void standardize_features(Dataset& train, Dataset& test) {
  if (train.dim() != test.dim())
    throw data_error("standardize_features: dimension mismatch");
  const double n = static_cast<double>(train.count());
  for (Index f = 0; f < train.dim(); ++f) {
    const double mean = train.signals.row(f).mean();
    const double var =
        (train.signals.row(f).array() - mean).square().sum() / n;
    const double sd = std::sqrt(var);
    if (sd == 0.0) continue;
    train.signals.row(f) = (train.signals.row(f).array() - mean) / sd;
    test.signals.row(f) = (test.signals.row(f).array() - mean) / sd;
  }
}

Dataset concat_datasets(const Dataset& a, const Dataset& b) {
  if (a.dim() != b.dim()) throw data_error("concat_datasets: dimension mismatch");
  Dataset out;
  out.signals.resize(a.dim(), a.count() + b.count());
  out.signals.leftCols(a.count()) = a.signals;
  out.signals.rightCols(b.count()) = b.signals;
  out.name = a.name;
  if (a.labels || b.labels) {
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(out.count()), 0);
    if (a.labels)
      std::copy(a.labels->begin(), a.labels->end(), labels.begin());
    if (b.labels)
      std::copy(b.labels->begin(), b.labels->end(),
                labels.begin() + static_cast<std::ptrdiff_t>(a.count()));
    out.labels = std::move(labels);
  }
  return out;
}

}  // namespace udlad
