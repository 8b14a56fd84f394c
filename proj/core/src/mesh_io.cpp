#include "gcnn/mesh_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gcnn {

namespace {

// Line-oriented tokenizer that tracks positions for parse errors.
class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty, non-comment line. Returns false at EOF.
  bool next_line(char comment) {
    while (std::getline(in_, line_)) {
      ++line_no_;
      pos_ = 0;
      skip_space();
      if (pos_ >= line_.size()) continue;
      if (comment != '\0' && line_[pos_] == comment) continue;
      return true;
    }
    return false;
  }

  bool at_line_end() {
    skip_space();
    return pos_ >= line_.size();
  }

  std::string_view token() {
    skip_space();
    if (pos_ >= line_.size()) fail("unexpected end of line");
    std::size_t start = pos_;
    while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    return std::string_view(line_).substr(start, pos_ - start);
  }

  double number() {
    skip_space();
    const int col = column();
    std::string_view t = token();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size())
      throw MeshParseError("expected a number, got '" + std::string(t) + "'",
                           line_no_, col);
    return value;
  }

  long integer() {
    skip_space();
    const int col = column();
    std::string_view t = token();
    long value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size())
      throw MeshParseError("expected an integer, got '" + std::string(t) + "'",
                           line_no_, col);
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw MeshParseError(what, line_no_, column());
  }

  int line_no() const { return line_no_; }
  int column() const { return static_cast<int>(pos_) + 1; }
  std::string_view rest() const { return std::string_view(line_).substr(pos_); }

private:
  void skip_space() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }

  std::istream& in_;
  std::string line_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

Mesh load_off(std::istream& in) {
  LineReader r(in);
  if (!r.next_line('#')) r.fail("empty OFF file");
  if (r.token() != "OFF") r.fail("missing OFF header");
  if (!r.next_line('#')) r.fail("missing OFF count line");
  const long nv = r.integer();
  const long nf = r.integer();
  r.integer();  // edge count, ignored
  if (nv <= 0 || nf < 0) r.fail("invalid OFF counts");

  std::vector<Eigen::Vector3d> vertices;
  vertices.reserve(nv);
  for (long i = 0; i < nv; ++i) {
    if (!r.next_line('#')) r.fail("truncated vertex list");
    const double x = r.number();
    const double y = r.number();
    const double z = r.number();
    vertices.emplace_back(x, y, z);
  }

  std::vector<std::array<int, 3>> faces;
  faces.reserve(nf);
  for (long i = 0; i < nf; ++i) {
    if (!r.next_line('#')) r.fail("truncated face list");
    const long arity = r.integer();
    if (arity != 3) r.fail("only triangular faces are supported");
    const int a = static_cast<int>(r.integer());
    const int b = static_cast<int>(r.integer());
    const int c = static_cast<int>(r.integer());
    faces.push_back({a, b, c});
  }
  return Mesh(std::move(vertices), std::move(faces));
}

Mesh load_obj(std::istream& in) {
  LineReader r(in);
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> faces;

  auto face_index = [&r](std::string_view t) {
    // "i", "i/t", "i/t/n", "i//n": geometry index is the first field.
    const auto slash = t.find('/');
    if (slash != std::string_view::npos) t = t.substr(0, slash);
    long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || v == 0)
      r.fail("bad face index '" + std::string(t) + "'");
    return v;
  };

  while (r.next_line('#')) {
    const std::string_view rec = r.token();
    if (rec == "v") {
      const double x = r.number();
      const double y = r.number();
      const double z = r.number();
      vertices.emplace_back(x, y, z);
    } else if (rec == "f") {
      std::array<long, 3> raw{};
      for (int i = 0; i < 3; ++i) raw[i] = face_index(r.token());
      if (!r.at_line_end()) r.fail("only triangular faces are supported");
      std::array<int, 3> f{};
      for (int i = 0; i < 3; ++i) {
        // 1-based; negative indices count from the end per OBJ convention.
        long v = raw[i] > 0 ? raw[i] - 1
                            : static_cast<long>(vertices.size()) + raw[i];
        f[i] = static_cast<int>(v);
      }
      faces.push_back(f);
    }
    // Other record types (vn, vt, o, g, s, usemtl, ...) carry no geometry.
  }
  if (vertices.empty()) throw MeshParseError("no 'v' records", 1, 1);
  return Mesh(std::move(vertices), std::move(faces));
}

void append_double(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

MeshFormat format_from_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (ext == ".off") return MeshFormat::Off;
  if (ext == ".obj") return MeshFormat::Obj;
  throw std::runtime_error("unrecognized mesh extension '" + ext + "' for " +
                           path.string());
}

Mesh load_mesh(const std::filesystem::path& path, MeshFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mesh file " + path.string());
  try {
    return load_mesh(in, format);
  } catch (const MeshParseError& e) {
    throw MeshParseError(path.string() + ": " + e.what(), e.line, e.column);
  }
}

Mesh load_mesh(std::istream& in, MeshFormat format) {
  return format == MeshFormat::Off ? load_off(in) : load_obj(in);
}

void save_mesh(const Mesh& mesh, const std::filesystem::path& path,
               MeshFormat format) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write mesh file " + path.string());
  save_mesh(mesh, out, format);
}

void save_mesh(const Mesh& mesh, std::ostream& out, MeshFormat format) {
  std::string buf;
  buf.reserve(static_cast<std::size_t>(mesh.vertex_count()) * 48);
  if (format == MeshFormat::Off) {
    buf += "OFF\n";
    buf += std::to_string(mesh.vertex_count());
    buf += ' ';
    buf += std::to_string(mesh.face_count());
    buf += " 0\n";
  }
  for (const Eigen::Vector3d& p : mesh.vertices()) {
    if (format == MeshFormat::Obj) buf += "v ";
    append_double(buf, p.x());
    buf += ' ';
    append_double(buf, p.y());
    buf += ' ';
    append_double(buf, p.z());
    buf += '\n';
  }
  const int base = format == MeshFormat::Obj ? 1 : 0;
  for (const auto& f : mesh.faces()) {
    buf += format == MeshFormat::Obj ? "f" : "3";
    for (int v : f) {
      buf += ' ';
      buf += std::to_string(v + base);
    }
    buf += '\n';
  }
  out << buf;
}

}  // namespace gcnn
