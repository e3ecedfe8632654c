// SPDX-License-Identifier: Apache-2.0
//
// arched: spatial correlation and degrees of freedom of arched antenna arrays
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Usage:
//   arched <corr|spectrum|sweep|validate> --config <file.json> [--out <dir>] [--threads <n>]
//          [--<config_key> <value> ...]
//
// Every scalar config key can be overridden with a flag of the same name;
// --bend_angle_rad accepts one or more values.

#include "arched/experiment.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace
{
    struct Overrides
    {
        std::map<std::string, std::string> scalars; // key -> raw value
        std::vector<double> bend_angles;
        std::optional<std::size_t> oracle_order;
        std::optional<double> oracle_tolerance;
        std::optional<std::size_t> oracle_max_doublings;
        std::vector<double> dof_thresholds;
    };

    nlohmann::json parse_scalar(const std::string &raw)
    {
        try
        {
            return nlohmann::json::parse(raw);
        }
        catch (const nlohmann::json::parse_error &)
        {
            return raw; // bare strings such as --array_type ura
        }
    }

    void apply_overrides(nlohmann::json &cfg, const Overrides &o)
    {
        for (const auto &[key, raw] : o.scalars)
            cfg[key] = parse_scalar(raw);
        if (!o.bend_angles.empty())
            cfg["bend_angle_rad"] = o.bend_angles.size() == 1 ? nlohmann::json(o.bend_angles.front()) : nlohmann::json(o.bend_angles);
        if (!o.dof_thresholds.empty())
            cfg["dof_thresholds"] = o.dof_thresholds;
        if (o.oracle_order)
            cfg["oracle"]["order"] = *o.oracle_order;
        if (o.oracle_tolerance)
            cfg["oracle"]["tolerance"] = *o.oracle_tolerance;
        if (o.oracle_max_doublings)
            cfg["oracle"]["max_doublings"] = *o.oracle_max_doublings;
        // the JSON cannot carry both wavelength forms
        if (o.scalars.contains("wavelength_m"))
            cfg.erase("frequency_hz");
        if (o.scalars.contains("frequency_hz"))
            cfg.erase("wavelength_m");
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Spatial correlation and DoF spectra of arched antenna arrays"};
    app.set_version_flag("--version", arched::tool_version);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::size_t threads = 0;
    Overrides ov;

    app.add_option("--config", config_path, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "Output directory (overrides output_dir)");
    app.add_option("--threads", threads, "Worker threads, 0 = all cores (results do not depend on it)");

    for (const char *key : {"array_type", "n_elements", "rows", "per_arc", "arc_length_m", "wavelength_m", "frequency_hz",
                            "row_spacing_m", "output_dir", "seed", "pair_samples", "validation_bound", "spectrum_source"})
    {
        app.add_option_function<std::string>(std::string("--") + key, [&ov, key](const std::string &v) { ov.scalars[key] = v; },
                                             std::string("Override config key ") + key);
    }
    app.add_option("--bend_angle_rad", ov.bend_angles, "Bend angle(s) in radians")->expected(1, -1);
    app.add_option("--dof_thresholds", ov.dof_thresholds, "Relative DoF thresholds")->expected(1, -1);
    app.add_option_function<std::size_t>("--oracle_order", [&](std::size_t v) { ov.oracle_order = v; }, "Oracle base order");
    app.add_option_function<double>("--oracle_tolerance", [&](double v) { ov.oracle_tolerance = v; }, "Oracle convergence tolerance");
    app.add_option_function<std::size_t>("--oracle_max_doublings", [&](std::size_t v) { ov.oracle_max_doublings = v; },
                                         "Oracle order doublings");

    const std::map<std::string, arched::Command> commands{{"corr", arched::Command::corr},
                                                          {"spectrum", arched::Command::spectrum},
                                                          {"sweep", arched::Command::sweep},
                                                          {"validate", arched::Command::validate}};
    app.fallthrough();
    app.add_subcommand("corr", "Closed-form correlation matrix -> corr.csv");
    app.add_subcommand("spectrum", "Eigenvalue spectrum and DoF -> spectrum.csv, dof.json");
    app.add_subcommand("sweep", "DoF across bend angles -> sweep.csv, sweep_spectra.csv");
    app.add_subcommand("validate", "Closed form vs numerical oracle -> validation.json");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    arched::ExperimentConfig cfg;
    try
    {
        std::ifstream in(config_path);
        nlohmann::json j = nlohmann::json::parse(in);
        apply_overrides(j, ov);
        cfg = arched::parse_config(j);
    }
    catch (const nlohmann::json::exception &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    catch (const arched::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    arched::RunContext ctx;
    ctx.out_dir = out_dir.empty() ? cfg.output_dir : out_dir;
    ctx.threads = threads;

    const auto sub = app.get_subcommands().front()->get_name();
    const arched::RunResult res = arched::run_command(commands.at(sub), cfg, ctx, std::cerr);
    if (!res.message.empty() && res.exit_code <= 1)
        std::cout << sub << ": " << res.message << "\n";
    for (const auto &f : res.files)
        std::cout << "  " << (ctx.out_dir / f).string() << "\n";
    return res.exit_code;
}
