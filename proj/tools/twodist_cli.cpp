#include <iostream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twodist/pipeline.hpp"

namespace {

int default_workers() {
#ifdef _OPENMP
    return std::max(1, omp_get_max_threads());
#else
    return 1;
#endif
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and maximality certification of the 277-point two-distance set in R^23"};
    app.require_subcommand(1);

    int workers = default_workers();
    std::string cache_dir = ".twodist_cache";
    std::string certificate = "certificate.json";
    bool skip_long = false;

    app.add_option("--workers", workers, "Worker threads for the parallel stages")->check(CLI::PositiveNumber);
    app.add_option("--cache", cache_dir, "Directory for cached stage artifacts");
    app.add_option("--certificate", certificate, "Output path for the certificate JSON");
    app.add_flag("--skip-long", skip_long, "Replace the full dual-lattice enumeration with the bounded checks");

    auto* cmd_construct = app.add_subcommand("construct", "Build the 277-point set (code, graph, embedding, root, u)");
    auto* cmd_verify = app.add_subcommand("verify", "Run every verification stage except the long enumeration");
    auto* cmd_maximality = app.add_subcommand("maximality", "Certify maximality (full enumeration unless --skip-long)");
    auto* cmd_all = app.add_subcommand("all", "Run the whole pipeline");
    for (auto* sub : {cmd_construct, cmd_verify, cmd_maximality, cmd_all}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // configuration error
    }

    twodist::PipelineConfig cfg;
    cfg.cache_dir = cache_dir;
    cfg.workers = workers;
    cfg.certificate_path = certificate;
    cfg.long_maximality = !skip_long;

    using twodist::Stage;
    if (cmd_construct->parsed()) {
        cfg.stages = {Stage::Code, Stage::Graph, Stage::Embed, Stage::Construct};
    } else if (cmd_verify->parsed()) {
        cfg.stages = {Stage::Code, Stage::Graph, Stage::Spectrum, Stage::Embed, Stage::Construct, Stage::Maximality};
        cfg.long_maximality = false;
    } else if (cmd_maximality->parsed()) {
        cfg.stages = {Stage::Maximality};
    } else if (cmd_all->parsed()) {
        cfg.stages = {Stage::Code, Stage::Graph, Stage::Spectrum, Stage::Embed, Stage::Construct, Stage::Maximality};
    }

    try {
        twodist::ExtensionCertificate cert = twodist::run(cfg);
        std::cout << cert.to_text();
        return 0;
    } catch (const twodist::VerificationError& e) {
        std::cerr << "FAILED: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
