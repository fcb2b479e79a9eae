#include "pate/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "pate/rng.hpp"

namespace pate {
namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    if (!cell.empty() && cell.back() == '\r') cell.pop_back();
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

int code_for(const std::string& value, std::vector<std::string>& names,
             std::unordered_map<std::string, int>& codes) {
  auto it = codes.find(value);
  if (it != codes.end()) return it->second;
  int code = static_cast<int>(names.size());
  names.push_back(value);
  codes.emplace(value, code);
  return code;
}

}  // namespace

Dataset load_csv(const std::string& path, const std::string& label_column,
                 const std::string& group_column, bool include_group_feature) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_csv: cannot open '" + path + "'");

  std::string line;
  if (!std::getline(in, line) || line.empty())
    throw std::runtime_error("load_csv: '" + path + "' is empty or has no header row");
  const std::vector<std::string> header = split_line(line);

  auto column_of = [&](const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
      throw std::runtime_error("load_csv: column '" + name + "' not found in '" + path + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t label_col = column_of(label_column);
  const std::size_t group_col = column_of(group_column);
  if (label_col == group_col)
    throw std::runtime_error("load_csv: label and group column are the same: '" + label_column + "'");

  Dataset ds;
  std::vector<std::size_t> numeric_cols;
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (j == label_col || j == group_col) continue;
    numeric_cols.push_back(j);
    ds.feature_names.push_back(header[j]);
  }
  if (include_group_feature) ds.feature_names.push_back(group_column);

  std::unordered_map<std::string, int> label_codes, group_codes;
  std::vector<double> row_values;
  std::size_t row_number = 1;  // header was row 1
  while (std::getline(in, line)) {
    ++row_number;
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size())
      throw std::runtime_error("load_csv: row " + std::to_string(row_number) + " has " +
                               std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(header.size()));
    row_values.clear();
    for (std::size_t j : numeric_cols) {
      const std::string& cell = cells[j];
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (cell.empty() || end != cell.c_str() + cell.size())
        throw std::runtime_error("load_csv: non-numeric cell '" + cell + "' at row " +
                                 std::to_string(row_number) + ", column '" + header[j] + "'");
      row_values.push_back(v);
    }
    if (cells[label_col].empty())
      throw std::runtime_error("load_csv: empty label at row " + std::to_string(row_number));
    if (cells[group_col].empty())
      throw std::runtime_error("load_csv: empty group at row " + std::to_string(row_number));
    ds.labels.push_back(code_for(cells[label_col], ds.label_names, label_codes));
    ds.groups.push_back(code_for(cells[group_col], ds.group_names, group_codes));
    if (include_group_feature) row_values.push_back(static_cast<double>(ds.groups.back()));
    ds.features.data.insert(ds.features.data.end(), row_values.begin(), row_values.end());
  }

  if (ds.labels.empty()) throw std::runtime_error("load_csv: '" + path + "' has no data rows");
  ds.features.rows = ds.labels.size();
  ds.features.cols = ds.feature_names.size();
  ds.class_count = static_cast<int>(ds.label_names.size());
  ds.group_count = static_cast<int>(ds.group_names.size());
  return ds;
}

Dataset standardize(const Dataset& ds) {
  const std::size_t n = ds.size(), d = ds.dim();
  if (n < 2) throw std::invalid_argument("standardize: need at least 2 rows");

  Dataset out = ds;
  for (std::size_t j = 0; j < d; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += ds.features.at(i, j);
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double dev = ds.features.at(i, j) - mean;
      ss += dev * dev;
    }
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    for (std::size_t i = 0; i < n; ++i) {
      out.features.at(i, j) = sd == 0.0 ? 0.0 : (ds.features.at(i, j) - mean) / sd;
    }
  }
  return out;
}

Dataset take_rows(const Dataset& ds, const std::vector<std::size_t>& indices) {
  Dataset out;
  out.feature_names = ds.feature_names;
  out.label_names = ds.label_names;
  out.group_names = ds.group_names;
  out.class_count = ds.class_count;
  out.group_count = ds.group_count;
  out.features = Matrix(indices.size(), ds.dim());
  out.labels.reserve(indices.size());
  out.groups.reserve(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    const std::size_t i = indices[r];
    std::copy(ds.features.row(i).begin(), ds.features.row(i).end(), out.features.row(r).begin());
    out.labels.push_back(ds.labels[i]);
    out.groups.push_back(ds.groups[i]);
  }
  return out;
}

SplitResult split(const Dataset& ds, const SplitSpec& spec) {
  const std::size_t n = ds.size();
  if (spec.private_fraction <= 0.0 || spec.private_fraction >= 1.0)
    throw std::invalid_argument("split: private_fraction must be in (0,1)");
  const auto n_private = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * spec.private_fraction));
  const std::size_t n_public = n - n_private;
  if (spec.public_train_count > n_public)
    throw std::invalid_argument("split: public_train_count " +
                                std::to_string(spec.public_train_count) + " exceeds public pool " +
                                std::to_string(n_public));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto rng = make_engine(spec.seed);
  std::shuffle(order.begin(), order.end(), rng);

  const std::vector<std::size_t> priv(order.begin(), order.begin() + n_private);
  const std::vector<std::size_t> pub_train(order.begin() + n_private,
                                           order.begin() + n_private + spec.public_train_count);
  const std::vector<std::size_t> pub_test(order.begin() + n_private + spec.public_train_count,
                                          order.end());
  return {take_rows(ds, priv), take_rows(ds, pub_train), take_rows(ds, pub_test)};
}

std::vector<Dataset> partition_teachers(const Dataset& private_set, std::size_t k,
                                        std::uint64_t seed) {
  const std::size_t n = private_set.size();
  if (k < 1) throw std::invalid_argument("partition_teachers: k must be >= 1");
  if (k > n)
    throw std::invalid_argument("partition_teachers: k = " + std::to_string(k) +
                                " exceeds private set size " + std::to_string(n));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto rng = make_engine(seed);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::vector<std::size_t>> shards(k);
  for (std::size_t pos = 0; pos < n; ++pos) shards[pos % k].push_back(order[pos]);

  std::vector<Dataset> out;
  out.reserve(k);
  for (const auto& shard : shards) out.push_back(take_rows(private_set, shard));
  return out;
}

Dataset synthesize(const SynthConfig& cfg) {
  if (cfg.n == 0 || cfg.d == 0) throw std::invalid_argument("synthesize: n and d must be positive");
  if (cfg.class_count < 2) throw std::invalid_argument("synthesize: class_count must be >= 2");
  if (cfg.group_fractions.empty())
    throw std::invalid_argument("synthesize: group_fractions must be nonempty");
  if (cfg.norm_scale_per_group.size() != cfg.group_fractions.size())
    throw std::invalid_argument("synthesize: norm_scale_per_group size mismatch");
  double frac_sum = 0.0;
  for (double f : cfg.group_fractions) {
    if (f < 0.0) throw std::invalid_argument("synthesize: negative group fraction");
    frac_sum += f;
  }
  if (std::abs(frac_sum - 1.0) > 1e-9)
    throw std::invalid_argument("synthesize: group_fractions must sum to 1");
  for (double s : cfg.norm_scale_per_group)
    if (s <= 0.0) throw std::invalid_argument("synthesize: norm scales must be positive");
  if (cfg.label_noise < 0.0 || cfg.label_noise >= 0.5)
    throw std::invalid_argument("synthesize: label_noise must be in [0, 0.5)");

  const std::size_t g_count = cfg.group_fractions.size();

  // Deterministic group allocation: floor counts, remainder to the largest
  // fractional parts.
  std::vector<std::size_t> group_sizes(g_count);
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  for (std::size_t g = 0; g < g_count; ++g) {
    const double exact = cfg.group_fractions[g] * static_cast<double>(cfg.n);
    group_sizes[g] = static_cast<std::size_t>(std::floor(exact));
    assigned += group_sizes[g];
    remainders.emplace_back(exact - std::floor(exact), g);
  }
  std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (std::size_t r = 0; assigned < cfg.n; ++r, ++assigned) {
    group_sizes[remainders[r % g_count].second] += 1;
  }

  std::vector<int> group_of;
  group_of.reserve(cfg.n);
  for (std::size_t g = 0; g < g_count; ++g)
    group_of.insert(group_of.end(), group_sizes[g], static_cast<int>(g));

  auto rng = make_engine(cfg.seed);
  std::shuffle(group_of.begin(), group_of.end(), rng);

  // Class means on a circle of radius 2 in the first two dimensions; unit
  // noise keeps the clusters cleanly separable when label_noise = 0.
  const double radius = 2.0;
  std::vector<std::vector<double>> means(cfg.class_count, std::vector<double>(cfg.d, 0.0));
  for (int c = 0; c < cfg.class_count; ++c) {
    const double angle = 2.0 * M_PI * static_cast<double>(c) / static_cast<double>(cfg.class_count);
    means[c][0] = radius * std::cos(angle);
    if (cfg.d > 1) means[c][1] = radius * std::sin(angle);
  }

  Dataset ds;
  ds.features = Matrix(cfg.n, cfg.d);
  ds.labels.resize(cfg.n);
  ds.groups = group_of;
  ds.class_count = cfg.class_count;
  ds.group_count = static_cast<int>(g_count);
  for (std::size_t j = 0; j < cfg.d; ++j) ds.feature_names.push_back("f" + std::to_string(j));
  for (int c = 0; c < cfg.class_count; ++c) ds.label_names.push_back("c" + std::to_string(c));
  for (std::size_t g = 0; g < g_count; ++g) ds.group_names.push_back("g" + std::to_string(g));

  std::uniform_int_distribution<int> label_dist(0, cfg.class_count - 1);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    const int y = label_dist(rng);
    const double scale = cfg.norm_scale_per_group[static_cast<std::size_t>(group_of[i])];
    for (std::size_t j = 0; j < cfg.d; ++j)
      ds.features.at(i, j) = scale * (means[y][j] + noise(rng));
    int observed = y;
    if (cfg.label_noise > 0.0 && unit(rng) < cfg.label_noise) {
      int shift = 1 + static_cast<int>(unit(rng) * (cfg.class_count - 1));
      if (shift > cfg.class_count - 1) shift = cfg.class_count - 1;
      observed = (y + shift) % cfg.class_count;
    }
    ds.labels[i] = observed;
  }
  return ds;
}

Dataset group_subset(const Dataset& ds, int group_id) {
  if (group_id < 0 || group_id >= ds.group_count)
    throw std::invalid_argument("group_subset: unknown group id " + std::to_string(group_id));
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < ds.size(); ++i)
    if (ds.groups[i] == group_id) keep.push_back(i);
  return take_rows(ds, keep);
}

}  // namespace pate
