#include "kinknet/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include "json.hpp"
#include "kinknet/kink.hpp"

namespace kinknet {

namespace {

using nlohmann::json;

json parse_json_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw ConfigError("cannot open " + file.string());
    try {
        return json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ConfigError(file.string() + ": " + e.what());
    }
}

const json& field(const json& obj, const char* key, const std::filesystem::path& file,
                  const std::string& where) {
    if (!obj.contains(key))
        throw ConfigError(file.string() + ": missing field `" + key + "` in " + where);
    return obj.at(key);
}

double number_field(const json& obj, const char* key, const std::filesystem::path& file,
                    const std::string& where) {
    const json& v = field(obj, key, file, where);
    if (!v.is_number())
        throw ConfigError(file.string() + ": field `" + std::string(key) + "` in " + where +
                          " must be a number");
    return v.get<double>();
}

int int_field(const json& obj, const char* key, const std::filesystem::path& file,
              const std::string& where) {
    const json& v = field(obj, key, file, where);
    if (!v.is_number_integer())
        throw ConfigError(file.string() + ": field `" + std::string(key) + "` in " + where +
                          " must be an integer");
    return v.get<int>();
}

std::string string_field(const json& obj, const char* key, const std::filesystem::path& file,
                         const std::string& where) {
    const json& v = field(obj, key, file, where);
    if (!v.is_string())
        throw ConfigError(file.string() + ": field `" + std::string(key) + "` in " + where +
                          " must be a string");
    return v.get<std::string>();
}

}  // namespace

MetricGraph load_graph(const std::filesystem::path& file) {
    const json doc = parse_json_file(file);
    if (!doc.is_object())
        throw ConfigError(file.string() + ": top level must be an object");

    std::vector<Vertex> vertices;
    for (const auto& jv : field(doc, "vertices", file, "graph")) {
        Vertex v;
        v.id = int_field(jv, "id", file, "vertices");
        v.x = number_field(jv, "x", file, "vertices");
        v.y = number_field(jv, "y", file, "vertices");
        vertices.push_back(v);
    }

    std::vector<Edge> edges;
    for (const auto& je : field(doc, "edges", file, "graph")) {
        Edge e;
        e.id = int_field(je, "id", file, "edges");
        e.from = int_field(je, "from", file, "edges");
        e.to = int_field(je, "to", file, "edges");
        e.n_points = int_field(je, "n_points", file, "edges");
        e.dx = number_field(je, "dx", file, "edges");
        edges.push_back(e);
    }

    return MetricGraph(std::move(vertices), std::move(edges));
}

RunConfig load_config(const std::filesystem::path& file) {
    const json doc = parse_json_file(file);
    if (!doc.is_object())
        throw ConfigError(file.string() + ": top level must be an object");

    RunConfig cfg;
    cfg.dt = number_field(doc, "dt", file, "config");
    if (!(cfg.dt > 0.0)) throw ConfigError(file.string() + ": dt must be > 0");
    cfg.t_final = number_field(doc, "t_final", file, "config");
    if (!(cfg.t_final > 0.0)) throw ConfigError(file.string() + ": t_final must be > 0");

    try {
        cfg.scheme = scheme_by_name(string_field(doc, "scheme", file, "config"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(file.string() + ": " + e.what());
    }

    if (doc.contains("output_every")) {
        cfg.output_every = int_field(doc, "output_every", file, "config");
        if (cfg.output_every < 1)
            throw ConfigError(file.string() + ": output_every must be >= 1");
    }
    if (doc.contains("output_dir"))
        cfg.output_dir = string_field(doc, "output_dir", file, "config");
    if (doc.contains("potential")) {
        cfg.potential = string_field(doc, "potential", file, "config");
        try {
            potential_by_name(cfg.potential);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(file.string() + ": " + e.what());
        }
    }

    if (doc.contains("initial_conditions")) {
        const json& ics = doc.at("initial_conditions");
        if (!ics.is_array())
            throw ConfigError(file.string() + ": initial_conditions must be an array");
        for (const auto& jic : ics) {
            InitialConditionSpec ic;
            ic.edge_id = int_field(jic, "edge_id", file, "initial_conditions");
            const std::string where = "initial_conditions[edge_id=" +
                                      std::to_string(ic.edge_id) + "]";
            const std::string kind = string_field(jic, "kind", file, where);
            if (kind == "zero") {
                ic.kind = InitialConditionSpec::Kind::zero;
            } else if (kind == "constant") {
                ic.kind = InitialConditionSpec::Kind::constant;
                ic.value = number_field(jic, "value", file, where);
            } else if (kind == "kink") {
                ic.kind = InitialConditionSpec::Kind::kink;
                ic.c = number_field(jic, "c", file, where);
                if (!(std::abs(ic.c) < 1.0))
                    throw ConfigError(file.string() + ": " + where + ": |c| must be < 1");
                ic.x0_fraction = number_field(jic, "x0_fraction", file, where);
                if (!(ic.x0_fraction >= 0.0 && ic.x0_fraction <= 1.0))
                    throw ConfigError(file.string() + ": " + where +
                                      ": x0_fraction must be in [0,1]");
                ic.polarity = int_field(jic, "polarity", file, where);
                if (ic.polarity != 1 && ic.polarity != -1)
                    throw ConfigError(file.string() + ": " + where + ": polarity must be +1 or -1");
                const std::string dir = string_field(jic, "direction", file, where);
                if (dir == "forward") {
                    ic.direction = InitialConditionSpec::Direction::forward;
                } else if (dir == "backward") {
                    ic.direction = InitialConditionSpec::Direction::backward;
                } else {
                    throw ConfigError(file.string() + ": " + where +
                                      ": direction must be `forward` or `backward`");
                }
            } else {
                throw ConfigError(file.string() + ": " + where + ": unknown kind `" + kind + "`");
            }
            cfg.initial_conditions.push_back(ic);
        }
    }

    return cfg;
}

FieldState initial_state_from_specs(const MetricGraph& g,
                                    const std::vector<InitialConditionSpec>& ics) {
    std::map<int, const InitialConditionSpec*> by_edge;
    for (const auto& ic : ics) {
        if (g.edge_index(ic.edge_id) < 0)
            throw ConfigError("initial condition names unknown edge " +
                              std::to_string(ic.edge_id));
        if (!by_edge.insert({ic.edge_id, &ic}).second)
            throw ConfigError("duplicate initial condition for edge " +
                              std::to_string(ic.edge_id));
    }

    EdgeArrays u0, v0;
    u0.reserve(g.edges().size());
    v0.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        const auto n = static_cast<std::size_t>(e.n_points);
        std::vector<double> u(n, 0.0), v(n, 0.0);
        auto it = by_edge.find(e.id);
        if (it != by_edge.end()) {
            const InitialConditionSpec& ic = *it->second;
            switch (ic.kind) {
                case InitialConditionSpec::Kind::zero:
                    break;
                case InitialConditionSpec::Kind::constant:
                    std::fill(u.begin(), u.end(), ic.value);
                    break;
                case InitialConditionSpec::Kind::kink: {
                    const double L = e.length();
                    const double center = ic.x0_fraction * L;
                    const bool forward = ic.direction == InitialConditionSpec::Direction::forward;
                    KinkSpec ks{ic.c, forward ? -center : -(L - center), ic.polarity};
                    for (std::size_t j = 0; j < n; ++j) {
                        const double x = static_cast<double>(j) * e.dx;
                        const double arg = forward ? x : L - x;
                        u[j] = kink_u(arg, 0.0, ks);
                        v[j] = kink_v(arg, 0.0, ks);
                    }
                    break;
                }
            }
        }
        u0.push_back(std::move(u));
        v0.push_back(std::move(v));
    }

    return project_initial_condition(g, std::move(u0), std::move(v0));
}

LoadedRun load_run(const std::filesystem::path& graph_file,
                   const std::filesystem::path& config_file) {
    LoadedRun run{load_graph(graph_file), load_config(config_file),
                  NonlinearPotential{}, FieldState{}};
    require_valid(run.graph);
    require_cfl(run.graph, run.config.dt);
    run.potential = potential_by_name(run.config.potential);
    run.initial = initial_state_from_specs(run.graph, run.config.initial_conditions);
    return run;
}

std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc())
        throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

void write_snapshot(const MetricGraph& g, const FieldState& s,
                    const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "edge_id,node_index,arclength,x,y,u,v\n";
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const Edge& e = g.edges()[ei];
        for (int j = 0; j < e.n_points; ++j) {
            const auto [x, y] = node_embedding(g, e.id, j);
            const bool vertex_row = j == 0 || j == e.n_points - 1;
            out << e.id << ',' << j << ','
                << format_double(static_cast<double>(j) * e.dx) << ','
                << format_double(x) << ',' << format_double(y) << ','
                << format_double(s.u[ei][static_cast<std::size_t>(j)]) << ',';
            if (!vertex_row) out << format_double(s.v[ei][static_cast<std::size_t>(j)]);
            out << '\n';
        }
    }
    if (!out)
        throw std::runtime_error("write failed for " + path.string());
}

FieldState read_snapshot(const MetricGraph& g, const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    FieldState s = make_zero_state(g);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error(path.string() + ": empty snapshot");
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        std::array<std::string, 7> cols;
        std::size_t start = 0, col = 0;
        for (; col < cols.size(); ++col) {
            const std::size_t comma = line.find(',', start);
            cols[col] = line.substr(start, comma == std::string::npos ? comma : comma - start);
            if (comma == std::string::npos) {
                ++col;
                break;
            }
            start = comma + 1;
        }
        if (col != cols.size())
            throw std::runtime_error(path.string() + ": row " + std::to_string(row) +
                                     " has too few columns");
        auto parse_double = [&](const std::string& text) {
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size())
                throw std::runtime_error(path.string() + ": row " + std::to_string(row) +
                                         ": bad number `" + text + "`");
            return value;
        };
        const int edge_id = std::stoi(cols[0]);
        const int node = std::stoi(cols[1]);
        const int ei = g.edge_index(edge_id);
        if (ei < 0)
            throw std::runtime_error(path.string() + ": row " + std::to_string(row) +
                                     ": unknown edge " + cols[0]);
        const Edge& e = g.edges()[static_cast<std::size_t>(ei)];
        if (node < 0 || node >= e.n_points)
            throw std::runtime_error(path.string() + ": row " + std::to_string(row) +
                                     ": node index out of range");
        const double u = parse_double(cols[5]);
        s.u[static_cast<std::size_t>(ei)][static_cast<std::size_t>(node)] = u;
        if (node == 0)
            s.u_vertex[static_cast<std::size_t>(g.vertex_index(e.from))] = u;
        else if (node == e.n_points - 1)
            s.u_vertex[static_cast<std::size_t>(g.vertex_index(e.to))] = u;
        if (!cols[6].empty())
            s.v[static_cast<std::size_t>(ei)][static_cast<std::size_t>(node)] =
                parse_double(cols[6]);
    }
    return s;
}

EnergySeriesWriter::EnergySeriesWriter(const MetricGraph& g, const std::filesystem::path& path)
    : path_(path) {
    std::ofstream out(path_, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path_.string() + " for writing");
    out << "step,time,total_energy,kirchhoff_residual_max,flux_residual_max";
    for (const auto& e : g.edges()) out << ",edge_" << e.id;
    out << '\n';
}

void EnergySeriesWriter::append(long long step, const EnergyRecord& rec) {
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (!out)
        throw std::runtime_error("cannot open " + path_.string() + " for appending");
    out << step << ',' << format_double(rec.time) << ',' << format_double(rec.total_energy)
        << ',' << format_double(rec.kirchhoff_residual_max) << ','
        << format_double(rec.flux_residual_max);
    for (double h : rec.per_edge_energy) out << ',' << format_double(h);
    out << '\n';
}

std::filesystem::path resolve_output_dir(const std::optional<std::string>& cli_out,
                                         const RunConfig& config) {
    if (cli_out && !cli_out->empty()) return *cli_out;
    if (!config.output_dir.empty()) return config.output_dir;
    if (const char* env = std::getenv("KINKNET_OUT"); env && *env) return env;
    return ".";
}

}  // namespace kinknet
