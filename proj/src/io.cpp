#include "hallkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hallkit {

GroupParseError::GroupParseError(const std::string& msg, std::size_t line, std::optional<std::size_t> generator)
    : std::runtime_error("line " + std::to_string(line) +
                         (generator ? ", generator " + std::to_string(*generator) : std::string()) + ": " + msg),
      line_(line),
      generator_(generator) {}

namespace {

constexpr std::size_t kMaxDegree = 10'000;

std::size_t line_at(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

// Offsets of the elements of the top-level "generators" array.
std::vector<std::size_t> generator_offsets(const std::string& text) {
  std::vector<std::size_t> out;
  int depth = 0;
  bool in_gens = false, want_colon = false, want_array = false;
  std::string last_key;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '"') {
      std::size_t j = i + 1;
      std::string s;
      while (j < text.size() && text[j] != '"') {
        if (text[j] == '\\') ++j;
        if (j < text.size()) s += text[j];
        ++j;
      }
      if (depth == 1) {
        last_key = s;
        want_colon = true;
      }
      i = j;
      continue;
    }
    if (c == ':' && want_colon) {
      want_colon = false;
      want_array = last_key == "generators";
      continue;
    }
    if (c == '[' || c == '{') {
      if (want_array && depth == 1 && c == '[') in_gens = true;
      else if (in_gens && depth == 2) out.push_back(i);
      want_array = false;
      ++depth;
    } else if (c == ']' || c == '}') {
      --depth;
      if (depth == 1) in_gens = false;
    } else if (in_gens && depth == 2 && !std::isspace(static_cast<unsigned char>(c)) && c != ',') {
      out.push_back(i);  // a scalar where an image list belongs
      while (i + 1 < text.size() && text[i + 1] != ',' && text[i + 1] != ']') ++i;
    }
  }
  return out;
}

}  // namespace

GroupFile parse_group_json(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GroupParseError(e.what(), line_at(text, e.byte == 0 ? 0 : e.byte - 1), std::nullopt);
  }
  if (!doc.is_object()) throw GroupParseError("top level must be an object", 1, std::nullopt);
  GroupFile out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw GroupParseError("\"name\" must be a string", 1, std::nullopt);
    out.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("degree") || !doc["degree"].is_number_unsigned())
    throw GroupParseError("\"degree\" must be a non-negative integer", 1, std::nullopt);
  const auto n = doc["degree"].get<std::size_t>();
  if (n == 0 || n > kMaxDegree) throw GroupParseError("degree out of range", 1, std::nullopt);
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw GroupParseError("\"generators\" must be an array of image lists", 1, std::nullopt);
  auto offsets = generator_offsets(text);
  std::vector<Perm> gens;
  const auto& arr = doc["generators"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto fail = [&](const std::string& msg) {
      throw GroupParseError(msg, i < offsets.size() ? line_at(text, offsets[i]) : 1, i);
    };
    if (!arr[i].is_array()) fail("generator must be a list of images");
    if (arr[i].size() != n) fail("expected " + std::to_string(n) + " images, got " + std::to_string(arr[i].size()));
    std::vector<Point> img;
    for (const auto& v : arr[i]) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= n) fail("image out of range");
      img.push_back(v.get<Point>());
    }
    try {
      gens.emplace_back(std::move(img));
    } catch (const std::invalid_argument&) {
      fail("images do not form a permutation");
    }
  }
  out.group = PermGroup(n, std::move(gens));
  return out;
}

GroupFile read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupParseError("cannot open " + path, 0, std::nullopt);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_json(ss.str());
}

std::string group_to_json(const std::string& name, const PermGroup& g) {
  std::ostringstream os;
  os << "{\n  \"name\": " << nlohmann::json(name).dump() << ",\n  \"degree\": " << g.degree()
     << ",\n  \"generators\": [";
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    os << (i ? ",\n" : "\n") << "    [";
    auto img = gens[i].images();
    for (std::size_t j = 0; j < img.size(); ++j) os << (j ? ", " : "") << img[j];
    os << "]";
  }
  os << (gens.empty() ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

}  // namespace hallkit
