#include "lss/io.hpp"

#include <fstream>
#include <sstream>

namespace lss {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

int parse_header_int(const std::string& line, const std::string& key) {
  std::istringstream in(line);
  std::string word;
  int value = 0;
  if (!(in >> word) || word != key || !(in >> value) || value < 0)
    throw ParseError("malformed map header, expected '" + key + " <n>': " + line);
  return value;
}

bool is_passable(char c) {
  switch (c) {
    case '.': case 'G': return true;
    case '@': case 'O': case 'T': return false;
    default: throw ParseError(std::string("unknown map cell character '") + c + "'");
  }
}

}  // namespace

VertexId GridMap::vertex_at(int row, int col) const {
  if (row < 0 || col < 0 || row >= height || col >= width) return -1;
  return cell_to_vertex[static_cast<std::size_t>(row) * width + col];
}

static GridMap build_grid(int height, int width, const std::vector<bool>& open) {
  GridMap map;
  map.height = height;
  map.width = width;
  map.cell_to_vertex.assign(static_cast<std::size_t>(height) * width, -1);
  std::vector<Coord> coords;
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c)
      if (open[static_cast<std::size_t>(r) * width + c]) {
        map.cell_to_vertex[static_cast<std::size_t>(r) * width + c] =
            static_cast<VertexId>(coords.size());
        coords.push_back({r, c});
      }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c) {
      VertexId u = map.vertex_at(r, c);
      if (u < 0) continue;
      if (VertexId v = map.vertex_at(r, c + 1); v >= 0) edges.emplace_back(u, v);
      if (VertexId v = map.vertex_at(r + 1, c); v >= 0) edges.emplace_back(u, v);
    }
  int n = static_cast<int>(coords.size());
  map.graph = std::make_shared<const Graph>(n, edges, std::move(coords));
  return map;
}

GridMap load_map(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.size() < 4) throw ParseError("map file too short");
  {
    std::istringstream in(lines[0]);
    std::string key, kind;
    if (!(in >> key >> kind) || key != "type")
      throw ParseError("malformed map header, expected 'type <kind>'");
  }
  int height = parse_header_int(lines[1], "height");
  int width = parse_header_int(lines[2], "width");
  if (lines[3] != "map" && lines[3].rfind("map", 0) != 0)
    throw ParseError("malformed map header, expected 'map'");

  std::vector<std::string> rows(lines.begin() + 4, lines.end());
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (static_cast<int>(rows.size()) != height)
    throw ParseError("map declares " + std::to_string(height) + " rows, found " +
                     std::to_string(rows.size()));
  std::vector<bool> open(static_cast<std::size_t>(height) * width);
  for (int r = 0; r < height; ++r) {
    if (static_cast<int>(rows[r].size()) != width)
      throw ParseError("row " + std::to_string(r) + " has width " +
                       std::to_string(rows[r].size()) + ", expected " +
                       std::to_string(width));
    for (int c = 0; c < width; ++c)
      open[static_cast<std::size_t>(r) * width + c] = is_passable(rows[r][c]);
  }
  return build_grid(height, width, open);
}

GridMap load_map_file(const std::string& path) { return load_map(read_text_file(path)); }

GridMap empty_grid(int height, int width) {
  return build_grid(height, width,
                    std::vector<bool>(static_cast<std::size_t>(height) * width, true));
}

std::string render_map(const GridMap& map) {
  std::ostringstream out;
  out << "type octile\nheight " << map.height << "\nwidth " << map.width << "\nmap\n";
  for (int r = 0; r < map.height; ++r) {
    for (int c = 0; c < map.width; ++c) out << (map.passable(r, c) ? '.' : '@');
    out << '\n';
  }
  return out.str();
}

std::vector<AgentTask> load_scenario(std::string_view text, int count,
                                     const GridMap& map) {
  if (count < 0) throw std::invalid_argument("negative agent count");
  auto lines = split_lines(text);
  std::vector<AgentTask> out;
  if (count == 0) return out;
  if (lines.empty() || lines[0].rfind("version", 0) != 0)
    throw ParseError("scenario must start with a version line");

  auto to_vertex = [&](int x, int y, std::size_t line_no) {
    VertexId v = map.vertex_at(y, x);
    if (v < 0)
      throw ParseError("scenario line " + std::to_string(line_no + 1) + ": cell (" +
                       std::to_string(x) + "," + std::to_string(y) +
                       ") is blocked or out of range");
    return v;
  };

  for (std::size_t k = 1; k < lines.size() && static_cast<int>(out.size()) < count; ++k) {
    if (lines[k].empty()) continue;
    std::vector<std::string> fields;
    std::istringstream in(lines[k]);
    std::string field;
    while (std::getline(in, field, '\t')) fields.push_back(field);
    if (fields.size() < 8)
      throw ParseError("scenario line " + std::to_string(k + 1) + " has " +
                       std::to_string(fields.size()) + " fields");
    try {
      int sx = std::stoi(fields[4]), sy = std::stoi(fields[5]);
      int gx = std::stoi(fields[6]), gy = std::stoi(fields[7]);
      out.push_back({to_vertex(sx, sy, k), to_vertex(gx, gy, k)});
    } catch (const std::logic_error&) {
      throw ParseError("scenario line " + std::to_string(k + 1) +
                       ": non-numeric coordinate");
    }
  }
  if (static_cast<int>(out.size()) < count)
    throw ParseError("scenario has " + std::to_string(out.size()) +
                     " records, requested " + std::to_string(count));
  return out;
}

std::vector<AgentTask> load_scenario_file(const std::string& path, int count,
                                          const GridMap& map) {
  return load_scenario(read_text_file(path), count, map);
}

Instance instance_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("vertices").get<int>();
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<Coord> coords;
    if (j.contains("coords"))
      for (const auto& c : j.at("coords")) coords.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    auto graph = std::make_shared<const Graph>(n, edges, std::move(coords));

    std::vector<AgentTask> agents;
    for (const auto& a : j.at("agents"))
      agents.push_back({a.at("start").get<int>(), a.at("goal").get<int>()});

    DurationTable table(static_cast<int>(agents.size()));
    const auto& durations = j.at("durations");
    for (AgentId i = 0; i < static_cast<AgentId>(agents.size()); ++i) {
      const nlohmann::json* entry = nullptr;
      if (durations.is_array()) {
        entry = &durations.at(i);
      } else if (auto it = durations.find(std::to_string(i)); it != durations.end()) {
        entry = &*it;
      } else {
        throw ParseError("no durations for agent " + std::to_string(i));
      }
      if (entry->is_number()) {
        table.set_default(i, Time::from_double(entry->get<double>()));
        continue;
      }
      if (entry->contains("default"))
        table.set_default(i, Time::from_double(entry->at("default").get<double>()));
      bool symmetric = !entry->value("asymmetric", false);
      if (entry->contains("per_edge"))
        for (const auto& e : entry->at("per_edge")) {
          VertexId u = e.at(0).get<int>(), v = e.at(1).get<int>();
          if (!graph->has_edge(u, v))
            throw ParseError("per-edge duration on non-edge " + std::to_string(u) +
                             "-" + std::to_string(v));
          table.set_edge(i, u, v, Time::from_double(e.at(2).get<double>()), symmetric);
        }
    }
    return Instance(std::move(graph), std::move(table), std::move(agents));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad instance json: ") + e.what());
  }
}

nlohmann::json instance_to_json(const Instance& instance) {
  const Graph& g = instance.graph();
  nlohmann::json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (g.has_coords()) {
    j["coords"] = nlohmann::json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      j["coords"].push_back({g.coord(v).row, g.coord(v).col});
  }
  j["durations"] = nlohmann::json::object();
  const auto& table = instance.durations();
  for (AgentId i = 0; i < instance.agent_count(); ++i) {
    nlohmann::json d = nlohmann::json::object();
    if (auto def = table.default_value(i)) d["default"] = def->seconds();
    const auto& arcs = table.overrides(i);
    if (!arcs.empty()) {
      bool symmetric = true;
      for (const auto& [uv, t] : arcs) {
        auto back = arcs.find({uv.second, uv.first});
        if (back == arcs.end() || back->second != t) symmetric = false;
      }
      d["asymmetric"] = !symmetric;
      d["per_edge"] = nlohmann::json::array();
      for (const auto& [uv, t] : arcs)
        if (!symmetric || uv.first < uv.second)
          d["per_edge"].push_back({uv.first, uv.second, t.seconds()});
    }
    j["durations"][std::to_string(i)] = d;
  }
  j["agents"] = nlohmann::json::array();
  for (const auto& a : instance.agents())
    j["agents"].push_back({{"start", a.start}, {"goal", a.goal}});
  return j;
}

Instance load_instance_file(const std::string& path) {
  try {
    return instance_from_json(nlohmann::json::parse(read_text_file(path)));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lss
