#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "kinknet/diagnostics.hpp"
#include "kinknet/io.hpp"
#include "kinknet/kink.hpp"
#include "kinknet/run.hpp"

using namespace kinknet;
namespace fs = std::filesystem;

namespace {

fs::path data_dir() { return fs::path(KINKNET_DATA_DIR); }

fs::path fresh_dir(const std::string& tag) {
    static std::mt19937_64 rng(std::random_device{}());
    fs::path p = fs::temp_directory_path() /
                 ("kinknet_test_" + tag + "_" + std::to_string(rng()));
    fs::create_directories(p);
    return p;
}

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& text) {
    fs::path p = dir / name;
    std::ofstream out(p, std::ios::binary);
    out << text;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MetricGraph small_path_graph() {
    return MetricGraph({{1, 0.0, 0.0}, {2, 1.0, 0.0}, {3, 2.0, 2.0}},
                       {{1, 1, 2, 8, 0.25}, {2, 2, 3, 6, 0.5}});
}

}  // namespace

TEST_CASE("load_graph reads the bundled tetrahedral graph") {
    MetricGraph g = load_graph(data_dir() / "g0.json");
    REQUIRE(g.vertices().size() == 4);
    REQUIRE(g.edges().size() == 6);
    CHECK(validate_graph(g).empty());
    CHECK(g.edge(1).from == 1);
    CHECK(g.edge(1).to == 2);
    CHECK(g.edge(5).from == 4);
    CHECK(g.edge(5).to == 1);
    for (const auto& e : g.edges()) {
        CHECK(e.n_points == 500);
        CHECK(e.dx == 0.02);
    }
    auto m = incidence_matrix(g);
    CHECK(m[0] == std::vector<int>{-1, 0, 0, 0, 1, -1});
    CHECK(m[1] == std::vector<int>{1, -1, -1, 0, 0, 0});
    CHECK(m[2] == std::vector<int>{0, 1, 0, -1, 0, 1});
    CHECK(m[3] == std::vector<int>{0, 0, 1, 1, -1, 0});
}

TEST_CASE("load_graph errors cite the file and field") {
    fs::path dir = fresh_dir("graph_errors");
    SUBCASE("missing file") {
        CHECK_THROWS_AS((void)load_graph(dir / "nope.json"), ConfigError);
    }
    SUBCASE("syntax error cites position") {
        fs::path p = write_file(dir, "bad.json", "{ vertices: ");
        try {
            (void)load_graph(p);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("bad.json") != std::string::npos);
        }
    }
    SUBCASE("missing field is named") {
        fs::path p = write_file(dir, "nofield.json",
                                R"({"vertices":[{"id":1,"x":0}],"edges":[]})");
        try {
            (void)load_graph(p);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("`y`") != std::string::npos);
        }
    }
    fs::remove_all(dir);
}

TEST_CASE("load_config reads the bundled run files") {
    RunConfig c95 = load_config(data_dir() / "run_c095.json");
    CHECK(c95.dt == 0.01);
    CHECK(c95.t_final == 33.0);
    CHECK(c95.scheme == Scheme::leapfrog);
    CHECK(c95.output_every == 50);
    CHECK(c95.potential == "sine_gordon");
    REQUIRE(c95.initial_conditions.size() == 6);
    int kinks = 0, constants = 0;
    for (const auto& ic : c95.initial_conditions) {
        if (ic.kind == InitialConditionSpec::Kind::kink) {
            ++kinks;
            CHECK(ic.c == 0.95);
            CHECK(ic.x0_fraction == 0.5);
            CHECK(ic.polarity == 1);
        } else if (ic.kind == InitialConditionSpec::Kind::constant) {
            ++constants;
            CHECK(ic.value == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
        }
    }
    CHECK(kinks == 3);
    CHECK(constants == 3);

    RunConfig c5 = load_config(data_dir() / "run_c05.json");
    CHECK(c5.t_final == 40.0);
    for (const auto& ic : c5.initial_conditions)
        if (ic.kind == InitialConditionSpec::Kind::kink) CHECK(ic.c == 0.5);
}

TEST_CASE("load_config rejects bad values") {
    fs::path dir = fresh_dir("config_errors");
    auto expect_error = [&](const std::string& name, const std::string& body,
                            const std::string& needle) {
        fs::path p = write_file(dir, name, body);
        try {
            (void)load_config(p);
            FAIL("expected ConfigError for ", name);
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("neg_dt.json",
                 R"({"dt":-0.01,"t_final":1.0,"scheme":"leapfrog"})", "dt");
    expect_error("bad_scheme.json",
                 R"({"dt":0.01,"t_final":1.0,"scheme":"euler"})", "scheme");
    expect_error("bad_every.json",
                 R"({"dt":0.01,"t_final":1.0,"scheme":"leapfrog","output_every":0})",
                 "output_every");
    expect_error("bad_potential.json",
                 R"({"dt":0.01,"t_final":1.0,"scheme":"leapfrog","potential":"phi4"})",
                 "potential");
    expect_error("fast_kink.json",
                 R"({"dt":0.01,"t_final":1.0,"scheme":"leapfrog",
                     "initial_conditions":[{"edge_id":1,"kind":"kink","c":1.0,
                     "x0_fraction":0.5,"polarity":1,"direction":"forward"}]})",
                 "|c|");
    expect_error("bad_fraction.json",
                 R"({"dt":0.01,"t_final":1.0,"scheme":"leapfrog",
                     "initial_conditions":[{"edge_id":1,"kind":"kink","c":0.5,
                     "x0_fraction":1.5,"polarity":1,"direction":"forward"}]})",
                 "x0_fraction");
    expect_error("bad_polarity.json",
                 R"({"dt":0.01,"t_final":1.0,"scheme":"leapfrog",
                     "initial_conditions":[{"edge_id":1,"kind":"kink","c":0.5,
                     "x0_fraction":0.5,"polarity":2,"direction":"forward"}]})",
                 "polarity");
    expect_error("bad_direction.json",
                 R"({"dt":0.01,"t_final":1.0,"scheme":"leapfrog",
                     "initial_conditions":[{"edge_id":1,"kind":"kink","c":0.5,
                     "x0_fraction":0.5,"polarity":1,"direction":"up"}]})",
                 "direction");
    expect_error("bad_kind.json",
                 R"({"dt":0.01,"t_final":1.0,"scheme":"leapfrog",
                     "initial_conditions":[{"edge_id":1,"kind":"gaussian"}]})",
                 "kind");
    fs::remove_all(dir);
}

TEST_CASE("initial conditions: constants, kinks, and mirroring") {
    MetricGraph g = small_path_graph();

    SUBCASE("unknown edge is rejected") {
        InitialConditionSpec ic;
        ic.edge_id = 9;
        CHECK_THROWS_AS((void)initial_state_from_specs(g, {ic}), ConfigError);
    }
    SUBCASE("duplicate edge is rejected") {
        InitialConditionSpec a, b;
        a.edge_id = b.edge_id = 1;
        CHECK_THROWS_AS((void)initial_state_from_specs(g, {a, b}), ConfigError);
    }
    SUBCASE("unspecified edges stay zero, constants fill") {
        InitialConditionSpec ic;
        ic.edge_id = 2;
        ic.kind = InitialConditionSpec::Kind::constant;
        ic.value = 3.5;
        FieldState s = initial_state_from_specs(g, {ic});
        for (std::size_t j = 1; j + 1 < s.u[0].size(); ++j) CHECK(s.u[0][j] == 0.0);
        for (std::size_t j = 1; j + 1 < s.u[1].size(); ++j) CHECK(s.u[1][j] == 3.5);
        CHECK(s.u_vertex[2] == 3.5);
        CHECK(check_state(g, s).empty());
        CHECK(s.time == 0.0);
    }
    SUBCASE("backward kink mirrors the forward profile") {
        MetricGraph single({{1, 0, 0}, {2, 1, 0}}, {{1, 1, 2, 101, 0.1}});
        InitialConditionSpec fwd;
        fwd.edge_id = 1;
        fwd.kind = InitialConditionSpec::Kind::kink;
        fwd.c = 0.6;
        fwd.x0_fraction = 0.3;
        fwd.polarity = 1;
        fwd.direction = InitialConditionSpec::Direction::forward;
        InitialConditionSpec bwd = fwd;
        bwd.x0_fraction = 0.7;
        bwd.direction = InitialConditionSpec::Direction::backward;

        FieldState sf = initial_state_from_specs(single, {fwd});
        FieldState sb = initial_state_from_specs(single, {bwd});
        const std::size_t n = sf.u[0].size();
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(sf.u[0][j] == doctest::Approx(sb.u[0][n - 1 - j]).epsilon(1e-12));
            CHECK(sf.v[0][j] == doctest::Approx(sb.v[0][n - 1 - j]).epsilon(1e-12));
        }
        // forward kink at fraction 0.3 of length 10: u rises through pi near x = 3
        CHECK(sf.u[0][30] == doctest::Approx(M_PI).epsilon(1e-6));
    }
}

TEST_CASE("load_run builds a ready-to-step state") {
    LoadedRun run = load_run(data_dir() / "g0.json", data_dir() / "run_c095.json");
    CHECK(run.potential.name == "sine_gordon");
    CHECK(check_state(run.graph, run.initial).empty());
    const double h = discrete_hamiltonian(run.graph, run.initial, run.potential).total;
    CHECK(h == doctest::Approx(76.8615138).epsilon(0.005));

    fs::path dir = fresh_dir("load_run");
    fs::path bad_cfg = write_file(dir, "cfl.json",
                                  R"({"dt":0.05,"t_final":1.0,"scheme":"leapfrog"})");
    CHECK_THROWS_WITH_AS((void)load_run(data_dir() / "g0.json", bad_cfg),
                         doctest::Contains("CFL"), std::invalid_argument);
    fs::remove_all(dir);
}

TEST_CASE("format_double round-trips arbitrary doubles") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> dist(-1e3, 1e3);
    for (int i = 0; i < 200; ++i) {
        const double x = dist(rng);
        CHECK(std::stod(format_double(x)) == x);
    }
    CHECK(format_double(0.0) == "0");
    CHECK(std::stod(format_double(2.0 * M_PI)) == 2.0 * M_PI);
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(std::stod(format_double(1e-300)) == 1e-300);
}

TEST_CASE("snapshot writing and reading") {
    MetricGraph g = small_path_graph();
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    FieldState s = make_zero_state(g);
    for (std::size_t e = 0; e < s.u.size(); ++e) {
        for (auto& x : s.u[e]) x = dist(rng);
        for (std::size_t j = 1; j + 1 < s.v[e].size(); ++j) s.v[e][j] = dist(rng);
    }
    junction_update(g, s);

    fs::path dir = fresh_dir("snapshot");
    fs::path p = dir / "snap.csv";
    write_snapshot(g, s, p);

    SUBCASE("format details") {
        const std::string text = slurp(p);
        CHECK(text.find('\r') == std::string::npos);
        std::istringstream in(text);
        std::string line;
        std::getline(in, line);
        CHECK(line == "edge_id,node_index,arclength,x,y,u,v");
        int rows = 0;
        int empty_v_rows = 0;
        std::string first_data_line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            if (rows == 0) first_data_line = line;
            ++rows;
            if (line.back() == ',') ++empty_v_rows;
        }
        CHECK(rows == 8 + 6);           // sum of n_points
        CHECK(empty_v_rows == 4);       // two vertex rows per edge
        CHECK(first_data_line.substr(0, 4) == "1,0,");
    }

    SUBCASE("u and v round-trip bitwise, energy matches exactly") {
        FieldState r = read_snapshot(g, p);
        CHECK(r.u == s.u);
        CHECK(r.v == s.v);
        CHECK(r.u_vertex == s.u_vertex);
        const auto pot = sine_gordon_potential();
        CHECK(discrete_hamiltonian(g, r, pot).total ==
              discrete_hamiltonian(g, s, pot).total);
    }

    SUBCASE("three-node edge gives three data rows") {
        MetricGraph tiny({{1, 0, 0}, {2, 1, 0}}, {{1, 1, 2, 3, 0.5}});
        FieldState ts = make_zero_state(tiny);
        ts.u[0][1] = 1.25;
        junction_update(tiny, ts);
        fs::path tp = dir / "tiny.csv";
        write_snapshot(tiny, ts, tp);
        std::istringstream in(slurp(tp));
        std::string line;
        int lines = 0;
        while (std::getline(in, line))
            if (!line.empty()) ++lines;
        CHECK(lines == 4);  // header + 3 rows
    }

    fs::remove_all(dir);
}

TEST_CASE("energy series writer") {
    MetricGraph g = small_path_graph();
    const auto pot = sine_gordon_potential();
    FieldState s = make_zero_state(g);
    s.u[0][3] = 1.0;
    junction_update(g, s);

    fs::path dir = fresh_dir("energy");
    fs::path p = dir / "energy.csv";
    EnergySeriesWriter w(g, p);
    w.append(0, make_energy_record(g, s, pot));
    s.time = 0.5;
    w.append(50, make_energy_record(g, s, pot));

    std::istringstream in(slurp(p));
    std::string header, row0, row1;
    std::getline(in, header);
    std::getline(in, row0);
    std::getline(in, row1);
    CHECK(header == "step,time,total_energy,kirchhoff_residual_max,flux_residual_max,"
                    "edge_1,edge_2");
    CHECK(row0.substr(0, 4) == "0,0,");
    CHECK(row1.substr(0, 7) == "50,0.5,");
    fs::remove_all(dir);
}

TEST_CASE("output directory resolution order") {
    RunConfig cfg;
    const char* saved = std::getenv("KINKNET_OUT");
    std::string saved_value = saved ? saved : "";

    unsetenv("KINKNET_OUT");
    CHECK(resolve_output_dir(std::nullopt, cfg) == fs::path("."));
    setenv("KINKNET_OUT", "/tmp/from_env", 1);
    CHECK(resolve_output_dir(std::nullopt, cfg) == fs::path("/tmp/from_env"));
    cfg.output_dir = "from_config";
    CHECK(resolve_output_dir(std::nullopt, cfg) == fs::path("from_config"));
    CHECK(resolve_output_dir(std::string("from_cli"), cfg) == fs::path("from_cli"));

    if (saved)
        setenv("KINKNET_OUT", saved_value.c_str(), 1);
    else
        unsetenv("KINKNET_OUT");
}

TEST_CASE("simulate writes snapshots, energy series, and a summary") {
    fs::path dir = fresh_dir("simulate");
    fs::path graph = write_file(dir, "g.json", R"({
        "vertices": [{"id":1,"x":0,"y":0},{"id":2,"x":1,"y":0}],
        "edges": [{"id":1,"from":1,"to":2,"n_points":41,"dx":0.1}]
    })");
    fs::path config = write_file(dir, "run.json", R"({
        "dt": 0.05, "t_final": 1.0, "scheme": "leapfrog", "output_every": 5,
        "initial_conditions": [
            {"edge_id":1,"kind":"kink","c":0.5,"x0_fraction":0.5,"polarity":1,
             "direction":"forward"}
        ]
    })");

    LoadedRun run = load_run(graph, config);
    RunSummary sum = simulate(run, dir / "out");
    CHECK(sum.n_steps == 20);
    CHECK(sum.t_final == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sum.snapshots.size() == 5);  // steps 0, 5, 10, 15, 20
    CHECK(fs::exists(sum.energy_file));
    for (const auto& p : sum.snapshots) CHECK(fs::exists(p));
    // the short edge truncates roughly 2% of the kink's tails
    CHECK(sum.initial_energy == doctest::Approx(8.0 * lorentz_factor(0.5)).epsilon(0.05));
    CHECK(sum.relative_drift < 0.01);

    // final snapshot parses back into a consistent state
    FieldState last = read_snapshot(run.graph, sum.snapshots.back());
    CHECK(check_state(run.graph, last).empty());
    fs::remove_all(dir);
}
