#include "tori/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tori/errors.hpp"

namespace tori::io {

namespace {

using nlohmann::json;

std::vector<cubical::Voxel> parse_triples(const json& value,
                                          const std::string& what) {
  if (!value.is_array()) {
    throw InputError(what + " must be an array of [x, y, z] triples");
  }
  std::vector<cubical::Voxel> out;
  out.reserve(value.size());
  for (const json& item : value) {
    if (!item.is_array() || item.size() != 3) {
      throw InputError(what + " entries must be [x, y, z] triples");
    }
    cubical::Voxel v;
    std::int32_t* coords[3] = {&v.x, &v.y, &v.z};
    for (std::size_t k = 0; k < 3; ++k) {
      if (!item[k].is_number_integer()) {
        throw InputError(what + " coordinates must be integers");
      }
      const long long c = item[k].get<long long>();
      if (c <= -cubical::kCoordBound || c >= cubical::kCoordBound) {
        throw InputError(what + " coordinate " + std::to_string(c) +
                         " is out of range");
      }
      *coords[k] = static_cast<std::int32_t>(c);
    }
    out.push_back(v);
  }
  return out;
}

json triples_to_json(const std::vector<cubical::Voxel>& points) {
  json out = json::array();
  for (const cubical::Voxel& p : points) {
    out.push_back(json::array({p.x, p.y, p.z}));
  }
  return out;
}

std::string trimmed(const std::string& line) {
  const std::string ws = " \t\r\n";
  const std::size_t begin = line.find_first_not_of(ws);
  if (begin == std::string::npos) return "";
  const std::size_t end = line.find_last_not_of(ws);
  return line.substr(begin, end - begin + 1);
}

}  // namespace

EmbeddingFile parse_embedding(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("embedding file is not valid JSON: ") +
                     e.what());
  }
  if (!root.is_object() || !root.contains("components") ||
      !root["components"].is_array()) {
    throw InputError(
        "embedding file needs a top-level object with a \"components\" array");
  }
  EmbeddingFile file;
  std::size_t index = 0;
  for (const json& comp : root["components"]) {
    const std::string where = "component " + std::to_string(index);
    if (!comp.is_object()) {
      throw InputError(where + " must be an object");
    }
    ComponentFile out;
    if (!comp.contains("voxels")) {
      throw InputError(where + " needs a \"voxels\" array");
    }
    out.voxels = parse_triples(comp["voxels"], where + " \"voxels\"");
    if (!comp.contains("marking") || !comp["marking"].is_object() ||
        !comp["marking"].contains("m") || !comp["marking"].contains("l")) {
      throw InputError(where +
                       " needs a \"marking\" object with \"m\" and \"l\"");
    }
    out.m = parse_triples(comp["marking"]["m"], where + " marking \"m\"");
    out.l = parse_triples(comp["marking"]["l"], where + " marking \"l\"");
    if (comp.contains("box_margin")) {
      if (!comp["box_margin"].is_number_integer()) {
        throw InputError(where + " \"box_margin\" must be an integer");
      }
      const long long margin = comp["box_margin"].get<long long>();
      if (margin < -1000000 || margin > 1000000) {
        throw InputError(where + " \"box_margin\" is out of range");
      }
      out.box_margin = static_cast<int>(margin);
    }
    if (comp.contains("core")) {
      out.core = parse_triples(comp["core"], where + " \"core\"");
    }
    file.components.push_back(std::move(out));
    ++index;
  }
  return file;
}

std::string serialize_embedding(const EmbeddingFile& file) {
  json root;
  root["components"] = json::array();
  for (const ComponentFile& comp : file.components) {
    json c;
    c["voxels"] = triples_to_json(comp.voxels);
    c["marking"] = {{"m", triples_to_json(comp.m)},
                    {"l", triples_to_json(comp.l)}};
    c["box_margin"] = comp.box_margin;
    if (!comp.core.empty()) c["core"] = triples_to_json(comp.core);
    root["components"].push_back(std::move(c));
  }
  return root.dump(2) + "\n";
}

embedding::SystemEmbedding to_system(const EmbeddingFile& file,
                                     std::optional<int> margin_override) {
  std::vector<embedding::MarkedTorusEmbedding> components;
  components.reserve(file.components.size());
  for (const ComponentFile& comp : file.components) {
    const int margin =
        margin_override ? *margin_override : comp.box_margin;
    components.push_back(embedding::MarkedTorusEmbedding::make(
        cubical::VoxelSolid::from_voxels(comp.voxels),
        cubical::EdgeCycle::from_points(comp.m),
        cubical::EdgeCycle::from_points(comp.l), margin));
  }
  return embedding::SystemEmbedding::make(std::move(components));
}

std::vector<moves::Move> parse_moves(const std::string& text) {
  std::vector<moves::Move> out;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string token = trimmed(line);
    if (token.empty()) continue;
    moves::MoveToken kind;
    if (token == "A") kind = moves::MoveToken::A;
    else if (token == "A_INV") kind = moves::MoveToken::AInv;
    else if (token == "B") kind = moves::MoveToken::B;
    else if (token == "ISO") kind = moves::MoveToken::Iso;
    else if (token == "ROT") kind = moves::MoveToken::RigidRot;
    else {
      throw InputError("unknown move token '" + token + "' on line " +
                       std::to_string(line_number));
    }
    out.push_back({kind, ""});
  }
  return out;
}

std::string serialize_moves(const moves::MoveSequence& seq) {
  std::string out;
  for (const moves::Move& move : seq) {
    out += moves::token_name(move.kind);
    out += '\n';
  }
  return out;
}

ParsedWord parse_word(const std::vector<std::string>& tokens) {
  ParsedWord parsed;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& token = tokens[i];
    if (token == "swap") {
      if (i != 0) {
        throw UnknownGenerator("'swap' is only allowed as the leading token");
      }
      parsed.swap_first = true;
      continue;
    }
    if (token == "id") continue;  // the empty word
    std::string base = token;
    bool inverse = false;
    const std::size_t caret = token.find('^');
    if (caret != std::string::npos) {
      if (token.substr(caret) != "^-1") {
        throw UnknownGenerator("unknown generator token '" + token + "'");
      }
      base = token.substr(0, caret);
      inverse = true;
    }
    mcg::Generator gen;
    if (base == "m2") gen = mcg::Generator::MeridianShear;
    else if (base == "l2") gen = mcg::Generator::LongitudeShear;
    else if (base == "neg") gen = mcg::Generator::Negation;
    else if (base == "refl") gen = mcg::Generator::Reflection;
    else {
      throw UnknownGenerator("unknown generator token '" + token + "'");
    }
    if (gen == mcg::Generator::Negation || gen == mcg::Generator::Reflection) {
      inverse = false;  // self-inverse; keep words canonical
    }
    parsed.word.push_back({gen, inverse});
  }
  return parsed;
}

std::string word_to_string(const ParsedWord& parsed) {
  std::vector<std::string> parts;
  if (parsed.swap_first) parts.push_back("swap");
  for (const mcg::GenToken& token : parsed.word) {
    std::string name;
    switch (token.gen) {
      case mcg::Generator::MeridianShear: name = "m2"; break;
      case mcg::Generator::LongitudeShear: name = "l2"; break;
      case mcg::Generator::Negation: name = "neg"; break;
      case mcg::Generator::Reflection: name = "refl"; break;
      default: throw InternalError("generator token out of range");
    }
    if (token.inverse) name += "^-1";
    parts.push_back(std::move(name));
  }
  if (parts.empty()) return "id";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " " + parts[i];
  return out;
}

mcg::MappingClass compose_word(const ParsedWord& parsed) {
  mcg::MappingClass result = mcg::apply_word(parsed.word);
  if (parsed.swap_first) {
    result = mcg::multiply(result, mcg::MappingClass::make(0, 1, 1, 0));
  }
  return result;
}

mcg::MappingClass parse_matrix(const std::string& text) {
  std::istringstream stream(text);
  long long a, b, c, d;
  if (!(stream >> a >> b >> c >> d)) {
    throw InputError("matrix must be four integers \"a b c d\", got \"" +
                     text + "\"");
  }
  std::string extra;
  if (stream >> extra) {
    throw InputError("trailing input '" + extra + "' after matrix entries");
  }
  return mcg::MappingClass::make(a, b, c, d);
}

std::string read_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    throw InputError("cannot read file: " + path);
  }
  std::ostringstream out;
  out << stream.rdbuf();
  return out.str();
}

}  // namespace tori::io
