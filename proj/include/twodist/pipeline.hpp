#pragma once

#include <filesystem>
#include <set>

#include "twodist/certificate.hpp"

namespace twodist {

enum class Stage { Code, Graph, Spectrum, Embed, Construct, Maximality };

struct PipelineConfig {
    std::filesystem::path cache_dir = ".twodist_cache";
    int workers = 1;
    std::set<Stage> stages;         // closed over dependencies at run()
    bool long_maximality = true;    // false: bounded checks only (skip the 16.7M enumeration)
    std::filesystem::path certificate_path;  // empty: certificate not written to disk
};

// Adds every dependency of the requested stages.
std::set<Stage> stage_closure(std::set<Stage> stages);

// Executes the requested stages in dependency order, reusing cached
// artifacts whose key chain matches, and returns the certificate (sections
// only for requested stages). Any failed assertion throws VerificationError.
ExtensionCertificate run(const PipelineConfig& config);

}  // namespace twodist
