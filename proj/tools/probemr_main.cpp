#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "probemr/forcing.hpp"
#include "probemr/matrix.hpp"
#include "probemr/mr_classify.hpp"
#include "probemr/parallel_paths.hpp"
#include "probemr/rank_witness.hpp"
#include "probemr/scan.hpp"

using namespace probemr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> read_graph_lines(const std::vector<std::string>& files) {
    std::vector<std::string> lines;
    auto pull = [&](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
    };
    if (files.empty()) {
        pull(std::cin);
    } else {
        for (const std::string& f : files) {
            std::ifstream in(f);
            if (!in) throw std::runtime_error("cannot open input file: " + f);
            pull(in);
        }
    }
    return lines;
}

std::vector<int> parse_labels(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

int thread_count(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("PROBEMR_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

nlohmann::json certificate_json(const TwoPathsCertificate& cert) {
    return {{"path_p", cert.path_p}, {"path_q", cert.path_q}};
}

nlohmann::json core_json(const CoreStructure& cs) {
    nlohmann::json j;
    j["outer_cycle"] = cs.outer_cycle;
    nlohmann::json interior = nlohmann::json::array();
    for (auto [u, v] : cs.interior_edges) interior.push_back({u, v});
    j["interior_edges"] = interior;
    nlohmann::json pendants = nlohmann::json::array();
    for (const auto& p : cs.pendants)
        pendants.push_back({{"vertices", p.vertices}, {"insertion_point", p.insertion}});
    j["pendant_paths"] = pendants;
    return j;
}

int cmd_recognize(const std::vector<std::string>& files) {
    for (const std::string& line : read_graph_lines(files)) {
        Graph g = parse_graph6(line);
        auto rec = recognize(g);
        nlohmann::json j;
        j["graph6"] = line;
        j["two_parallel_paths"] = rec.is_two_parallel_paths;
        if (rec.certificate && rec.is_two_parallel_paths)
            j["certificate"] = certificate_json(*rec.certificate);
        if (rec.core) j["core_structure"] = core_json(*rec.core);
        std::cout << j.dump() << "\n";
    }
    return kExitOk;
}

int cmd_zf(const std::vector<std::string>& files, const std::string& nonprobes,
           const std::string& mode) {
    for (const std::string& line : read_graph_lines(files)) {
        Graph g = parse_graph6(line);
        nlohmann::json j;
        j["graph6"] = line;
        j["mode"] = mode;
        if (mode == "standard") {
            auto zn = zero_forcing_number(g);
            j["z"] = zn.z;
            j["witness"] = mask_to_vertices(zn.witness);
        } else {
            ProbeGraph pg(g, parse_labels(nonprobes));
            auto zn = probe_zero_forcing_number(pg);
            j["nonprobes"] = pg.nonprobes;
            j["z"] = zn.z;
            j["witness"] = mask_to_vertices(zn.witness);
        }
        std::cout << j.dump() << "\n";
    }
    return kExitOk;
}

int cmd_classify(const std::vector<std::string>& files, const std::string& nonprobes,
                 const std::string& catalog_path, const std::string& witness_out) {
    SpecialGraphCatalog catalog = catalog_path.empty()
                                      ? SpecialGraphCatalog::builtin()
                                      : SpecialGraphCatalog::from_file(catalog_path);
    for (const std::string& line : read_graph_lines(files)) {
        Graph g = parse_graph6(line);
        ProbeGraph pg(g, parse_labels(nonprobes));
        MrClassification c = classify(pg, catalog);
        nlohmann::json j = nlohmann::json::parse(classification_to_json(pg, c));
        if (!witness_out.empty()) {
            RationalMatrix w = nullity_witness(pg);
            nlohmann::json envelope;
            envelope["graph6"] = emit_graph6(pg.graph);
            envelope["nonprobes"] = pg.nonprobes;
            envelope["claimed_rank"] = rank(w);
            envelope["claimed_nullity"] = nullity(w);
            envelope["matrix"] = w.to_text();
            std::ofstream out(witness_out);
            if (!out) throw std::runtime_error("cannot write witness file: " + witness_out);
            out << envelope.dump(2) << "\n";
            j["witness_file"] = witness_out;
        }
        std::cout << j.dump() << "\n";
    }
    return kExitOk;
}

int cmd_witness(const std::vector<std::string>& files, const std::string& nonprobes,
                const std::string& out_path) {
    for (const std::string& line : read_graph_lines(files)) {
        Graph g = parse_graph6(line);
        ProbeGraph pg(g, parse_labels(nonprobes));
        RationalMatrix w = nullity_witness(pg);
        nlohmann::json envelope;
        envelope["graph6"] = emit_graph6(pg.graph);
        envelope["nonprobes"] = pg.nonprobes;
        envelope["claimed_rank"] = rank(w);
        envelope["claimed_nullity"] = nullity(w);
        envelope["matrix"] = w.to_text();
        if (out_path.empty()) {
            std::cout << envelope.dump() << "\n";
        } else {
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot write witness file: " + out_path);
            out << envelope.dump(2) << "\n";
            std::cout << nlohmann::json({{"witness_file", out_path}}).dump() << "\n";
        }
    }
    return kExitOk;
}

int cmd_scan(const std::string& check, int n_max, int threads) {
    std::cerr << "scan " << check << " up to n = " << n_max << " on " << threads
              << " thread(s)\n";
    ScanReport report = run_scan(check, n_max, threads);
    std::cout << report_to_json(report) << "\n";
    std::cerr << "tested " << report.tested << ", failed " << report.failed << " ("
              << report.wall_ms << " ms)\n";
    return report.failed == 0 ? kExitOk : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"probe graph minimum-rank and zero-forcing toolkit"};
    app.require_subcommand(1);
    bool json_flag = false;
    app.add_flag("--json", json_flag, "emit JSON on standard output (the default)");

    std::vector<std::string> files;
    std::string nonprobes, mode = "probe", check, catalog_path, out_path, witness_out;
    int n_max = 6, threads_flag = 0;

    auto* rec = app.add_subcommand("recognize", "two-parallel-paths recognition");
    rec->add_option("files", files, "graph6 input files (default: standard input)");

    auto* zf = app.add_subcommand("zf", "zero forcing number");
    zf->add_option("files", files);
    zf->add_option("--nonprobes", nonprobes, "comma-separated non-probe labels");
    zf->add_option("--mode", mode, "standard or probe")
        ->check(CLI::IsMember({"standard", "probe"}));

    auto* cls = app.add_subcommand("classify", "extreme minimum-rank classification");
    cls->add_option("files", files);
    cls->add_option("--nonprobes", nonprobes);
    cls->add_option("--catalog", catalog_path, "special-graph catalog JSON file");
    cls->add_option("--witness-out", witness_out, "also write the nullity witness here");

    auto* wit = app.add_subcommand("witness", "nullity witness matrix");
    wit->add_option("files", files);
    wit->add_option("--nonprobes", nonprobes);
    wit->add_option("--out", out_path, "write the witness envelope to a file");

    auto* scn = app.add_subcommand("scan", "batch theorem-verification scans");
    scn->add_option("--check", check, "one of the registered checks")->required();
    scn->add_option("--n", n_max, "maximum vertex count");
    scn->add_option("--threads", threads_flag, "worker threads (overrides PROBEMR_THREADS)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (rec->parsed()) return cmd_recognize(files);
        if (zf->parsed()) return cmd_zf(files, nonprobes, mode);
        if (cls->parsed()) return cmd_classify(files, nonprobes, catalog_path, witness_out);
        if (wit->parsed()) return cmd_witness(files, nonprobes, out_path);
        if (scn->parsed()) {
            std::vector<std::string> known = registered_checks();
            if (std::find(known.begin(), known.end(), check) == known.end()) {
                std::cerr << "unknown check: " << check << "\n";
                return kExitUsage;
            }
            return cmd_scan(check, n_max, thread_count(threads_flag));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
