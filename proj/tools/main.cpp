#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symrep/characters.hpp"
#include "symrep/irrep.hpp"
#include "symrep/json_io.hpp"
#include "symrep/partition.hpp"
#include "symrep/permutation.hpp"
#include "symrep/representation.hpp"
#include "symrep/tableaux.hpp"
#include "symrep/verify.hpp"

namespace {

using symrep::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    std::string cache_dir;
    int jobs = 1;
    bool force = false;
    std::uint64_t seed = 1;
};

std::string default_cache_dir() {
    if (const char* env = std::getenv("SYMREP_CACHE")) return env;
    return ".symrep-cache";
}

symrep::Partition parse_shape(const std::string& text, int n) {
    symrep::Partition p = symrep::Partition::parse(text);
    if (p.n() != n)
        throw UsageError("partition " + text + " does not sum to " + std::to_string(n));
    return p;
}

std::string shape_file_tag(const symrep::Partition& p) {
    std::string out = p.to_string();
    for (char& c : out)
        if (c == ',') c = '-';
    return out;
}

std::string perm_file_tag(const symrep::Permutation& p) {
    std::string out;
    for (int k = 0; k < p.n(); ++k) {
        if (p.n() > 9 && k > 0) out += '-';
        out += std::to_string(p[k] + 1);
    }
    return out;
}

// Cost guard: refuse work beyond the stated caps unless forced.
std::optional<int> guard(bool within, const std::string& what, bool force) {
    if (within || force) return std::nullopt;
    std::cerr << "refused: " << what << " (--force overrides)\n";
    return 2;
}

std::optional<Json> load_cached(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        return Json::parse(in);
    } catch (const Json::parse_error&) {
        return std::nullopt; // unreadable cache entry: recompute and rewrite
    }
}

void store_cached(const std::filesystem::path& path, const Json& doc) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    out << symrep::dump_json(doc);
}

// Column-aligned rendering of a matrix stored as nested arrays of strings.
std::string render_matrix(const Json& m, const std::string& indent) {
    std::vector<size_t> w;
    for (const auto& row : m)
        for (size_t c = 0; c < row.size(); ++c) {
            const std::string s = row[c].get<std::string>();
            if (c >= w.size()) w.resize(c + 1, 0);
            w[c] = std::max(w[c], s.size());
        }
    std::string out;
    for (const auto& row : m) {
        out += indent;
        for (size_t c = 0; c < row.size(); ++c) {
            const std::string s = row[c].get<std::string>();
            out += std::string(w[c] - s.size(), ' ') + s;
            if (c + 1 < row.size()) out += ' ';
        }
        out += '\n';
    }
    return out;
}

void emit(const Options& opt, const Json& doc, const std::string& text) {
    if (opt.format == "json")
        std::cout << symrep::dump_json(doc);
    else
        std::cout << text;
}

std::string render_g_text(const Json& doc) {
    std::string out = "g' for degree " + std::to_string(doc.at("n").get<int>()) + " shape " +
                      doc.at("partition").get<std::string>() + " (dim " +
                      std::to_string(doc.at("dim").get<int>()) + ", scale " +
                      doc.at("scale").get<std::string>() + ")\n";
    out += render_matrix(doc.at("gPrime"), "  ");
    out += "g'^-1:\n";
    out += render_matrix(doc.at("gPrimeInverse"), "  ");
    return out;
}

std::string render_rep_text(const Json& doc) {
    std::string out = "x' for degree " + std::to_string(doc.at("n").get<int>()) + " shape " +
                      doc.at("partition").get<std::string>() + "\n";
    for (const auto& entry : doc.at("matrices")) {
        out += entry.at("perm").get<std::string>() + ":\n";
        out += render_matrix(entry.at("x"), "  ");
    }
    return out;
}

std::string render_chartable_text(const Json& doc) {
    const auto& classes = doc.at("classes");
    const auto& rows = doc.at("rows");
    size_t w0 = 5; // "shape"
    for (const auto& r : rows) w0 = std::max(w0, r.at("partition").get<std::string>().size());
    std::vector<size_t> w(classes.size(), 0);
    for (size_t c = 0; c < classes.size(); ++c) {
        w[c] = std::max(classes[c].at("cycleType").get<std::string>().size(),
                        classes[c].at("size").get<std::string>().size());
        for (const auto& r : rows)
            w[c] = std::max(w[c], r.at("chi")[c].get<std::string>().size());
    }
    auto pad_left = [](const std::string& s, size_t width) {
        return std::string(width - s.size(), ' ') + s;
    };
    auto pad_right = [](const std::string& s, size_t width) {
        return s + std::string(width - s.size(), ' ');
    };
    std::string out = "character table for degree " + std::to_string(doc.at("n").get<int>()) + "\n";
    out += pad_right("shape", w0) + " |";
    for (size_t c = 0; c < classes.size(); ++c)
        out += " " + pad_left(classes[c].at("cycleType").get<std::string>(), w[c]);
    out += "\n" + pad_right("size", w0) + " |";
    for (size_t c = 0; c < classes.size(); ++c)
        out += " " + pad_left(classes[c].at("size").get<std::string>(), w[c]);
    out += "\n";
    for (const auto& r : rows) {
        out += pad_right(r.at("partition").get<std::string>(), w0) + " |";
        for (size_t c = 0; c < classes.size(); ++c)
            out += " " + pad_left(r.at("chi")[c].get<std::string>(), w[c]);
        out += "\n";
    }
    return out;
}

int cmd_tableaux(const Options& opt, int n, const std::string& shape_text) {
    if (auto rc = guard(n <= 7, "tableau enumeration capped at degree 7", opt.force)) return *rc;
    Json doc;
    std::string text;
    if (!shape_text.empty()) {
        symrep::Partition shape = parse_shape(shape_text, n);
        auto tabs = symrep::standard_tableaux(shape);
        doc["n"] = n;
        doc["partition"] = shape.to_string();
        doc["dim"] = std::to_string(tabs.size());
        Json list = Json::array();
        text = "degree " + std::to_string(n) + " shape " + shape.to_string() + ": " +
               std::to_string(tabs.size()) + " standard tableaux\n";
        for (size_t i = 0; i < tabs.size(); ++i) {
            std::string reading;
            for (int s : tabs[i].reading_sequence())
                reading += (reading.empty() ? "" : " ") + std::to_string(s + 1);
            Json item;
            item["index"] = int(i + 1);
            item["tableau"] = tabs[i].to_string();
            item["reading"] = reading;
            list.push_back(std::move(item));
            text += "  " + std::to_string(i + 1) + ": " + tabs[i].to_string() + "   (reading " +
                    reading + ")\n";
        }
        doc["tableaux"] = std::move(list);
    } else {
        doc["n"] = n;
        Json list = Json::array();
        symrep::Int sum = 0;
        text = "degree " + std::to_string(n) + " partitions\n";
        size_t width = 0;
        auto shapes = symrep::partitions(n);
        for (const auto& s : shapes) width = std::max(width, s.to_string().size());
        for (const auto& s : shapes) {
            symrep::Int m = symrep::dimension(s);
            sum += m * m;
            Json item;
            item["partition"] = s.to_string();
            item["dim"] = m.str();
            list.push_back(std::move(item));
            std::string name = s.to_string();
            text += "  " + name + std::string(width - name.size(), ' ') + "  dim " + m.str() +
                    "\n";
        }
        symrep::Int fact = symrep::factorial(n);
        doc["shapes"] = std::move(list);
        doc["sumSquares"] = sum.str();
        doc["factorial"] = fact.str();
        doc["match"] = sum == fact;
        text += "sum of squared dimensions = " + sum.str() + ", " + std::to_string(n) +
                "! = " + fact.str() + (sum == fact ? " : ok\n" : " : MISMATCH\n");
        if (sum != fact) {
            emit(opt, doc, text);
            return 1;
        }
    }
    emit(opt, doc, text);
    return 0;
}

int cmd_gmatrix(const Options& opt, int n, const std::string& shape_text) {
    if (auto rc = guard(n <= 7, "g-matrix construction capped at degree 7", opt.force)) return *rc;
    symrep::Partition shape = parse_shape(shape_text, n);
    std::filesystem::path path = std::filesystem::path(opt.cache_dir) /
                                 ("g_" + std::to_string(n) + "_" + shape_file_tag(shape) + ".json");
    std::optional<Json> doc;
    if (!opt.force) doc = load_cached(path);
    if (!doc) {
        symrep::IrrepBundle b = symrep::build_irrep_bundle(shape);
        doc = symrep::g_bundle_to_json(b);
        store_cached(path, *doc);
    }
    emit(opt, *doc, render_g_text(*doc));
    return 0;
}

int cmd_rep(const Options& opt, int n, const std::string& shape_text,
            const std::string& perm_text) {
    if (auto rc = guard(n <= 7, "representation expansion capped at degree 7", opt.force))
        return *rc;
    symrep::Partition shape = parse_shape(shape_text, n);
    std::string stem = "rep_" + std::to_string(n) + "_" + shape_file_tag(shape);
    std::optional<symrep::Permutation> perm;
    if (!perm_text.empty()) {
        perm = symrep::Permutation::parse(perm_text);
        if (perm->n() != n)
            throw UsageError("permutation " + perm->to_string() + " is not of degree " +
                             std::to_string(n));
        stem += "_p" + perm_file_tag(*perm);
    }
    std::filesystem::path path = std::filesystem::path(opt.cache_dir) / (stem + ".json");
    std::optional<Json> doc;
    if (!opt.force) doc = load_cached(path);
    if (!doc) {
        symrep::IrrepBundle b = symrep::build_irrep_bundle(shape);
        std::vector<symrep::RepMatrix> mats;
        if (perm) {
            mats.push_back(symrep::rep_matrix(b, *perm));
        } else {
            for (const auto& p : symrep::all_permutations(n))
                mats.push_back(symrep::rep_matrix(b, p));
        }
        doc = symrep::rep_dump_to_json(b, mats);
        store_cached(path, *doc);
    }
    emit(opt, *doc, render_rep_text(*doc));
    return 0;
}

int cmd_chartable(const Options& opt, int n) {
    if (auto rc = guard(n <= 7, "character table capped at degree 7", opt.force)) return *rc;
    std::filesystem::path path =
        std::filesystem::path(opt.cache_dir) / ("chartable_" + std::to_string(n) + ".json");
    std::optional<Json> doc;
    if (!opt.force) doc = load_cached(path);
    if (!doc) {
        doc = symrep::character_table_to_json(symrep::character_table(n));
        store_cached(path, *doc);
    }
    emit(opt, *doc, render_chartable_text(*doc));
    return 0;
}

int cmd_verify(const Options& opt, int n, const std::string& level) {
    const bool sample = level == "sample";
    if (auto rc = guard(sample ? n <= 6 : n <= 5,
                        "verification suite capped at degree 5 full / 6 sampled", opt.force))
        return *rc;
    symrep::VerifyOptions vo;
    vo.n = n;
    vo.sample_level = sample;
    vo.seed = opt.seed;
    vo.jobs = opt.jobs;
    symrep::Report report = symrep::run_verify(vo);
    std::cout << (opt.format == "json" ? report.to_json_text() : report.to_text());
    return report.all_passed() ? 0 : 1;
}

int cmd_claims(const Options& opt, int max_n, int samples) {
    if (auto rc = guard(max_n <= 7, "claims sweep capped at degree 7", opt.force)) return *rc;
    symrep::ClaimsOptions co;
    co.max_n = max_n;
    co.samples = samples;
    co.seed = opt.seed;
    co.jobs = opt.jobs;
    symrep::Report report = symrep::run_claims(co);
    std::cout << (opt.format == "json" ? report.to_json_text() : report.to_text());
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact integer representation matrices of symmetric groups"};
    app.fallthrough();
    Options opt;
    opt.cache_dir = default_cache_dir();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cache-dir", opt.cache_dir, "cache directory (default $SYMREP_CACHE)");
    app.add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--force", opt.force, "override cost guards and recompute cached results");
    app.add_option("--seed", opt.seed, "seed for sampled checks");
    app.require_subcommand(1);

    int t_n = 0;
    std::string t_shape;
    auto* tab = app.add_subcommand("tableaux", "list standard tableaux or per-partition dimensions");
    tab->add_option("n", t_n, "degree")->required()->check(CLI::PositiveNumber);
    tab->add_option("partition", t_shape, "partition such as 3,2");

    int g_n = 0;
    std::string g_shape;
    auto* gm = app.add_subcommand("gmatrix", "print g' and its inverse for one shape");
    gm->add_option("n", g_n, "degree")->required()->check(CLI::PositiveNumber);
    gm->add_option("partition", g_shape, "partition such as 3,2")->required();

    int r_n = 0;
    std::string r_shape, r_perm;
    auto* rp = app.add_subcommand("rep", "print x' for one permutation or the whole group");
    rp->add_option("n", r_n, "degree")->required()->check(CLI::PositiveNumber);
    rp->add_option("partition", r_shape, "partition such as 2,1")->required();
    rp->add_option("permutation", r_perm, "permutation such as \"[2 1 3]\" or 213");

    int c_n = 0;
    auto* ct = app.add_subcommand("chartable", "print the integer character table");
    ct->add_option("n", c_n, "degree")->required()->check(CLI::PositiveNumber);

    int v_n = 0;
    std::string v_level;
    auto* vf = app.add_subcommand("verify", "run the verification suite");
    vf->add_option("n", v_n, "degree")->required()->check(CLI::PositiveNumber);
    vf->add_option("level", v_level, "full or sample")
        ->required()
        ->check(CLI::IsMember({"full", "sample"}));

    int cl_max = 7, cl_samples = 1000;
    auto* cm = app.add_subcommand("claims", "scan the structural claims across degrees");
    cm->add_option("--max-n", cl_max, "largest degree to scan")->check(CLI::PositiveNumber);
    cm->add_option("--samples", cl_samples, "sampled permutations per shape at degree 7")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    }

    try {
        if (app.got_subcommand(tab)) return cmd_tableaux(opt, t_n, t_shape);
        if (app.got_subcommand(gm)) return cmd_gmatrix(opt, g_n, g_shape);
        if (app.got_subcommand(rp)) return cmd_rep(opt, r_n, r_shape, r_perm);
        if (app.got_subcommand(ct)) return cmd_chartable(opt, c_n);
        if (app.got_subcommand(vf)) return cmd_verify(opt, v_n, v_level);
        if (app.got_subcommand(cm)) return cmd_claims(opt, cl_max, cl_samples);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}
