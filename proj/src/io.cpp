#include "mincm/io.hpp"

#include <fstream>
#include <sstream>

#include "mincm/error.hpp"

namespace mincm::io {

using nlohmann::json;

namespace {

bool is_plain_integer(const std::string& s) {
  if (s.empty() || s.size() > 15) return false;
  if (s.size() > 1 && s[0] == '0') return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

std::string label_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(ErrorKind::MalformedInput,
              where + ": vertex labels must be strings or integers");
}

}  // namespace

json label_value(const std::string& label) {
  if (is_plain_integer(label)) return std::stoll(label);
  return label;
}

json face_to_json(const SimplicialComplex& c, Face f) {
  json row = json::array();
  for (const auto& l : c.labels_of(f)) row.push_back(label_value(l));
  return row;
}

SimplicialComplex read_text(std::istream& in) {
  std::vector<std::vector<std::string>> facets;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> labels;
    std::vector<int> columns;
    std::size_t pos = first;
    while (pos < line.size()) {
      std::size_t end = line.find_first_of(" \t", pos);
      if (end == std::string::npos) end = line.size();
      labels.push_back(line.substr(pos, end - pos));
      columns.push_back(static_cast<int>(pos) + 1);
      pos = line.find_first_not_of(" \t", end);
      if (pos == std::string::npos) break;
    }
    if (labels.size() == 1 && labels.front() == "{}") {
      facets.emplace_back();
      continue;
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == "{}" || labels[i].find('#') != std::string::npos)
        throw ParseError(line_no, columns[i],
                         "unexpected token '" + labels[i] + "'");
      for (std::size_t k = 0; k < i; ++k)
        if (labels[k] == labels[i])
          throw ParseError(line_no, columns[i],
                           "duplicate vertex label '" + labels[i] +
                               "' inside one facet");
    }
    facets.push_back(std::move(labels));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex parse_text(const std::string& text) {
  std::istringstream in(text);
  return read_text(in);
}

std::string write_text(const SimplicialComplex& c) {
  std::string out;
  for (Face f : c.facets()) {
    if (f.empty()) {
      out += "{}\n";
      continue;
    }
    bool first = true;
    f.for_each_vertex([&](Vertex v) {
      if (!first) out += ' ';
      out += c.label(v);
      first = false;
    });
    out += '\n';
  }
  return out;
}

SimplicialComplex from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array())
    throw Error(ErrorKind::MalformedInput,
                "structured complex needs a 'facets' array");
  std::vector<std::vector<std::string>> facets;
  for (std::size_t i = 0; i < doc["facets"].size(); ++i) {
    const json& f = doc["facets"][i];
    std::string where = "facets[" + std::to_string(i) + "]";
    if (!f.is_array())
      throw Error(ErrorKind::MalformedInput, where + " is not a list");
    std::vector<std::string> labels;
    for (const json& v : f) labels.push_back(label_text(v, where));
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = 0; b < a; ++b)
        if (labels[a] == labels[b])
          throw Error(ErrorKind::MalformedInput,
                      where + ": duplicate vertex label '" + labels[a] + "'");
    facets.push_back(std::move(labels));
  }
  std::vector<std::string> universe;
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array())
      throw Error(ErrorKind::MalformedInput, "'vertices' must be a list");
    for (const json& v : doc["vertices"])
      universe.push_back(label_text(v, "vertices"));
  } else if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
      throw Error(ErrorKind::MalformedInput, "'n' must be a non-negative integer");
    for (long long v = 0; v < doc["n"].get<long long>(); ++v)
      universe.push_back(std::to_string(v));
  }
  SimplicialComplex c =
      SimplicialComplex::from_facets_over(std::move(universe), facets);
  if (doc.contains("n") && doc["n"].is_number_integer() &&
      doc["n"].get<long long>() != c.num_vertices())
    throw Error(ErrorKind::MalformedInput,
                "'n' = " + std::to_string(doc["n"].get<long long>()) +
                    " disagrees with " + std::to_string(c.num_vertices()) +
                    " vertex labels");
  return c;
}

namespace {

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1;
    int column = 1;
    std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    throw ParseError(line, column, msg);
  }
}

}  // namespace

SimplicialComplex parse_json(const std::string& text) {
  return from_json(parse_json_text(text));
}

json to_json(const SimplicialComplex& c) {
  json doc;
  doc["n"] = c.num_vertices();
  json vertices = json::array();
  for (Vertex v = 0; v < c.num_vertices(); ++v)
    vertices.push_back(label_value(c.label(v)));
  doc["vertices"] = vertices;
  json facets = json::array();
  for (Face f : c.facets()) {
    json row = json::array();
    f.for_each_vertex([&](Vertex v) { row.push_back(label_value(c.label(v))); });
    facets.push_back(row);
  }
  doc["facets"] = facets;
  return doc;
}

std::string write_json(const SimplicialComplex& c) {
  return to_json(c).dump() + "\n";
}

SimplicialComplex parse_any(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{' &&
      text.compare(first, 2, "{}") != 0)
    return parse_json(text);
  return parse_text(text);
}

std::string read_file_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "': file not found");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SimplicialComplex read_file(const std::string& path) {
  return parse_any(read_file_text(path));
}

json to_json(const ShellingCertificate& cert) {
  json doc;
  doc["base"] = to_json(cert.base);
  json moves = json::array();
  for (Face f : cert.moves) moves.push_back(face_to_json(cert.target, f));
  doc["moves"] = moves;
  doc["target"] = to_json(cert.target);
  return doc;
}

ShellingCertificate certificate_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("base") || !doc.contains("moves") ||
      !doc.contains("target"))
    throw Error(ErrorKind::MalformedInput,
                "certificate needs 'base', 'moves' and 'target'");
  ShellingCertificate cert;
  cert.target = from_json(doc["target"]);
  SimplicialComplex base = from_json(doc["base"]);
  std::vector<Face> base_facets;
  for (Face f : base.facets())
    base_facets.push_back(cert.target.face_of(base.labels_of(f)));
  cert.base = SimplicialComplex::from_faces(cert.target.num_vertices(),
                                            std::move(base_facets),
                                            cert.target.labels());
  for (const json& m : doc["moves"]) {
    std::vector<std::string> labels;
    for (const json& v : m) labels.push_back(label_text(v, "moves"));
    cert.moves.push_back(cert.target.face_of(labels));
  }
  return cert;
}

json to_json(const SquarefreeIdeal& ideal, const SimplicialComplex& c) {
  json doc;
  doc["n"] = ideal.n;
  json vars = json::array();
  for (Vertex v = 0; v < ideal.n; ++v)
    vars.push_back(label_value(v < c.num_vertices() ? c.label(v)
                                                    : std::to_string(v)));
  doc["variables"] = vars;
  json gens = json::array();
  for (Face g : ideal.generators) {
    json row = json::array();
    g.for_each_vertex([&](Vertex v) {
      row.push_back(label_value(v < c.num_vertices() ? c.label(v)
                                                     : std::to_string(v)));
    });
    gens.push_back(row);
  }
  doc["generators"] = gens;
  return doc;
}

}  // namespace mincm::io
