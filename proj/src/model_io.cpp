#include <udlad/model_io.hpp>

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <vector>

namespace udlad {

static_assert(std::endian::native == std::endian::little,
              "model files are little-endian; big-endian hosts are unsupported");

namespace {

constexpr char kMagic[6] = {'U', 'D', 'L', 'A', 'D', '1'};

void put_i64(std::ostream& out, std::int64_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void put_f64(std::ostream& out, double v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::int64_t get_i64(std::istream& in) {
  std::int64_t v = 0;
  if (!in.read(reinterpret_cast<char*>(&v), sizeof v))
    throw data_error("model file truncated");
  return v;
}

double get_f64(std::istream& in) {
  double v = 0.0;
  if (!in.read(reinterpret_cast<char*>(&v), sizeof v))
    throw data_error("model file truncated");
  return v;
}

std::int64_t kind_code(RegKind kind) {
  switch (kind) {
    case RegKind::L21:
      return 0;
    case RegKind::L20:
      return 1;
    case RegKind::Trunc:
      return 2;
  }
  return -1;
}

RegKind kind_from_code(std::int64_t code) {
  switch (code) {
    case 0:
      return RegKind::L21;
    case 1:
      return RegKind::L20;
    case 2:
      return RegKind::Trunc;
    default:
      throw data_error("model file has an unknown regularizer code " +
                       std::to_string(code));
  }
}

}  // namespace

void save_model(const Model& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot write '" + path + "'");

  const Mat& A = model.dictionary.atoms();
  out.write(kMagic, sizeof kMagic);
  put_i64(out, A.rows());
  put_i64(out, A.cols());
  put_i64(out, static_cast<std::int64_t>(model.support_set.size()));
  put_i64(out, kind_code(model.config.regularizer.kind));
  put_f64(out, model.config.lambda);
  put_f64(out, model.config.regularizer.epsilon);
  put_i64(out, model.config.sparsity);
  put_i64(out, model.config.sweeps);
  put_i64(out, model.config.seed);
  out.write(reinterpret_cast<const char*>(A.data()),
            static_cast<std::streamsize>(sizeof(double)) * A.size());
  for (Index i : model.support_set) put_i64(out, i);
  if (!out) throw data_error("error while writing '" + path + "'");
}

Model load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open '" + path + "'");

  char magic[sizeof kMagic];
  if (!in.read(magic, sizeof magic) ||
      std::memcmp(magic, kMagic, sizeof kMagic) != 0)
    throw data_error("unrecognized model file '" + path + "'");

  const std::int64_t m = get_i64(in);
  const std::int64_t n = get_i64(in);
  const std::int64_t support_len = get_i64(in);
  if (m < 1 || n < 1 || support_len < 0 || support_len > n)
    throw data_error("model file has an invalid header");

  TrainConfig cfg;
  cfg.regularizer.kind = kind_from_code(get_i64(in));
  cfg.lambda = get_f64(in);
  cfg.regularizer.epsilon = get_f64(in);
  cfg.sparsity = get_i64(in);
  cfg.sweeps = get_i64(in);
  cfg.seed = get_i64(in);

  Mat A(m, n);
  if (!in.read(reinterpret_cast<char*>(A.data()),
               static_cast<std::streamsize>(sizeof(double)) * A.size()))
    throw data_error("model file truncated");

  std::vector<Index> support(static_cast<std::size_t>(support_len));
  for (auto& i : support) {
    i = get_i64(in);
    if (i < 0 || i >= n) throw data_error("model file has an out-of-range support index");
  }
  if (!std::is_sorted(support.begin(), support.end()))
    throw data_error("model file support set is not sorted");

  char extra = 0;
  if (in.read(&extra, 1)) throw data_error("model file has trailing bytes");

  return Model{Dictionary(std::move(A)), std::move(support), cfg, {}};
}

}  // namespace udlad
