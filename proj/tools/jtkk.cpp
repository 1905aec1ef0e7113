#include "CLI11.hpp"

#include "jtkk/catalog.hpp"
#include "jtkk/report.hpp"
#include "jtkk/serialize.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <random>
#include <thread>

using namespace jtkk;

namespace {

struct Options {
    std::string format = "human";
    std::size_t max_dim = 256;
    unsigned seed = 0;
    unsigned jobs = 0;
};

void emit(const Options& o, const std::vector<Report>& rs) {
    std::cout << (o.format == "machine" ? render_machine(rs) : render_human(rs));
}

Source guarded(const Options& o, const std::string& s) {
    Source src = load_source(s);
    if (o.max_dim && src.dim() > o.max_dim)
        throw std::invalid_argument(s + " has dim " + std::to_string(src.dim()) + " > --max-dim " + std::to_string(o.max_dim));
    return src;
}

const JordanAlgebra& need_jordan(const Source& s) {
    if (!s.jordan) throw std::invalid_argument(s.label + " is a Lie superalgebra; this command needs a Jordan superalgebra");
    return *s.jordan;
}

TkkAlgebra guarded_build(const Options& o, const JordanAlgebra& v, Construction c) {
    TkkAlgebra t = build(v, c);
    if (o.max_dim && t.dim() > o.max_dim)
        throw std::invalid_argument(t.source + " has dim " + std::to_string(t.dim()) + " > --max-dim " + std::to_string(o.max_dim));
    return t;
}

std::vector<std::string> all_sources() {
    auto out = shipped_jordan_entries();
    for (auto& s : shipped_lie_entries()) out.push_back(s);
    return out;
}

Report skipped(const std::string& label, const std::string& why) {
    Report r;
    r.subject = label;
    r.section("skipped").facts.push_back({"reason", why});
    return r;
}

int verify(const Options& o, const std::string& target) {
    std::vector<std::string> names = target == "all" ? all_sources() : std::vector<std::string>{target};
    std::vector<Report> out(names.size());
    std::vector<std::size_t> order(names.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937 rng(o.seed);
    std::shuffle(order.begin(), order.end(), rng);

    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors(names.size());
    auto work = [&] {
        for (std::size_t k; (k = next++) < order.size();) {
            std::size_t i = order[k];
            try {
                Source s = load_source(names[i]);
                out[i] = o.max_dim && s.dim() > o.max_dim
                             ? skipped(names[i], "dim " + std::to_string(s.dim()) + " > --max-dim")
                             : verify_source(s);
            } catch (const std::exception& e) {
                out[i].subject = names[i];
                out[i].section("errors").checks.push_back({"load and verify", false, e.what()});
            }
        }
    };
    unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, names.size());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    emit(o, out);
    return std::all_of(out.begin(), out.end(), [](const Report& r) { return r.ok(); }) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Jordan superalgebra and TKK construction toolkit"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--max-dim", o.max_dim, "Refuse algebras above this dimension (0 = no limit)");
    app.add_option("--seed", o.seed, "Seed for the order in which entries are processed");
    app.add_option("--jobs", o.jobs, "Worker threads (0 = hardware concurrency)");

    std::string source, construction, file;

    auto* dims = app.add_subcommand("dims", "Structure algebra dimensions and the inclusion report");
    dims->add_option("source", source, "Catalog name or AlgebraSpec file")->required();

    auto* tkk = app.add_subcommand("tkk", "Build a TKK construction and check it");
    tkk->add_option("source", source)->required();
    tkk->add_option("construction", construction, "kan | ko | kotilde | ti-inn | ti-der")->required();

    auto* ver = app.add_subcommand("verify", "Run the verification suite; exit 0 iff every check passes");
    ver->add_option("source", source, "Catalog name, AlgebraSpec file or \"all\"")->required();

    auto* exp = app.add_subcommand("export", "Write a construction as an AlgebraSpec file");
    exp->add_option("source", source)->required();
    exp->add_option("construction", construction)->required();
    exp->add_option("file", file)->required();

    auto* list = app.add_subcommand("list", "List catalog entries");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*dims) {
            emit(o, {dims_report(need_jordan(guarded(o, source)))});
            return 0;
        }
        if (*tkk) {
            Source s = guarded(o, source);
            Construction c = parse_construction(construction);
            guarded_build(o, need_jordan(s), c);
            Report r = tkk_report(*s.jordan, c);
            emit(o, {r});
            return r.ok() ? 0 : 1;
        }
        if (*ver) return verify(o, source);
        if (*exp) {
            Source s = guarded(o, source);
            Construction c = parse_construction(construction);
            TkkAlgebra t = guarded_build(o, need_jordan(s), c);
            std::string origins;
            for (auto x : t.origin) origins += (origins.empty() ? "" : ",") + to_string(x);
            save_file(file, to_spec(t.lie, {{"construction", to_string(c)},
                                            {"source", source},
                                            {"graded_dims", dims_string(t.graded_dims())},
                                            {"origin", origins}}));
            std::cout << "wrote " << file << ": " << t.source << " dim " << t.dim() << "\n";
            return 0;
        }
        if (*list) {
            for (const auto& i : jordan_catalog_info())
                std::cout << "jordan  " << i.name << (i.params.empty() ? "" : ":" + i.params) << "  " << i.description
                          << (i.external ? "  [external definition]" : "") << "\n";
            for (const auto& i : lie_catalog_info())
                std::cout << "lie     " << i.name << (i.params.empty() ? "" : ":" + i.params) << "  " << i.description << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
