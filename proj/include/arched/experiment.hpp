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

#ifndef ARCHED_EXPERIMENT_HPP
#define ARCHED_EXPERIMENT_HPP

#include "arched/correlation_closed.hpp"
#include "arched/correlation_oracle.hpp"
#include "arched/errors.hpp"
#include "arched/geometry.hpp"
#include "arched/spectrum.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <system_error>
#include <string>
#include <variant>
#include <vector>

// Configuration-driven experiment runner: one JSON document describes one
// array and the commands corr / spectrum / sweep / validate turn it into
// CSV and JSON artifacts.

namespace arched
{
    inline constexpr const char *tool_version = "1.0.0";
    inline constexpr double speed_of_light = 299792458.0;

    // Malformed or inconsistent configuration (exit code 2)
    class ConfigError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    enum class ArrayType
    {
        ula,
        ura
    };

    enum class SpectrumSource
    {
        closed,
        oracle
    };

    struct ExperimentConfig
    {
        ArrayType array_type = ArrayType::ula;
        std::size_t n_elements = 0; // ULA
        std::size_t rows = 0;       // URA
        std::size_t per_arc = 0;    // URA
        double arc_length_m = 0.0;
        std::vector<double> bend_angles_rad;
        std::optional<double> wavelength_m;
        std::optional<double> frequency_hz;
        double row_spacing_m = 0.0; // URA
        OracleSettings oracle;
        std::vector<double> dof_thresholds = default_dof_thresholds();
        std::string output_dir = "out";
        std::uint64_t seed = 0;
        std::size_t pair_samples = 10;
        double validation_bound = 1.0e-8;
        SpectrumSource spectrum_source = SpectrumSource::closed;

        double wavelength() const { return wavelength_m ? *wavelength_m : speed_of_light / *frequency_hz; }
    };

    using Geometry = std::variant<ArchedUlaGeometry, ArchedUraGeometry>;

    inline Geometry make_geometry(const ExperimentConfig &c, double beta)
    {
        if (c.array_type == ArrayType::ula)
            return ArchedUlaGeometry(c.n_elements, c.arc_length_m, beta, c.wavelength());
        return ArchedUraGeometry(c.rows, c.per_arc, c.row_spacing_m, c.arc_length_m, beta, c.wavelength());
    }

    // ----- parsing ------------------------------------------------------------------

    namespace detail
    {
        inline const std::set<std::string> &config_keys()
        {
            static const std::set<std::string> keys{
                "array_type", "n_elements", "rows", "per_arc", "arc_length_m", "bend_angle_rad", "wavelength_m",
                "frequency_hz", "row_spacing_m", "oracle", "dof_thresholds", "output_dir", "seed", "pair_samples",
                "validation_bound", "spectrum_source"};
            return keys;
        }

        inline double positive_number(const nlohmann::json &j, const std::string &key)
        {
            if (!j.contains(key))
                throw ConfigError("missing required key '" + key + "'");
            if (!j[key].is_number())
                throw ConfigError("'" + key + "' must be a number");
            const double v = j[key].get<double>();
            if (!(v > 0.0) || !std::isfinite(v))
                throw ConfigError("'" + key + "' must be positive");
            return v;
        }

        inline std::size_t count(const nlohmann::json &j, const std::string &key, std::size_t min)
        {
            if (!j.contains(key))
                throw ConfigError("missing required key '" + key + "'");
            if (!j[key].is_number_integer() || j[key].get<long long>() < static_cast<long long>(min))
                throw ConfigError("'" + key + "' must be an integer >= " + std::to_string(min));
            return j[key].get<std::size_t>();
        }
    }

    inline ExperimentConfig parse_config(const nlohmann::json &j)
    {
        using detail::count;
        using detail::positive_number;

        if (!j.is_object())
            throw ConfigError("config must be a JSON object");
        for (const auto &item : j.items())
            if (!detail::config_keys().contains(item.key()))
                throw ConfigError("unknown config key '" + item.key() + "'");

        ExperimentConfig c;
        const std::string type = j.value("array_type", std::string{});
        if (type == "ula")
        {
            c.array_type = ArrayType::ula;
            c.n_elements = count(j, "n_elements", 2);
        }
        else if (type == "ura")
        {
            c.array_type = ArrayType::ura;
            c.rows = count(j, "rows", 1);
            c.per_arc = count(j, "per_arc", 2);
            c.row_spacing_m = positive_number(j, "row_spacing_m");
        }
        else
            throw ConfigError("'array_type' must be \"ula\" or \"ura\"");

        c.arc_length_m = positive_number(j, "arc_length_m");

        if (!j.contains("bend_angle_rad"))
            throw ConfigError("missing required key 'bend_angle_rad'");
        const auto &beta = j["bend_angle_rad"];
        if (beta.is_number())
            c.bend_angles_rad = {beta.get<double>()};
        else if (beta.is_array() && !beta.empty())
        {
            for (const auto &b : beta)
            {
                if (!b.is_number())
                    throw ConfigError("'bend_angle_rad' entries must be numbers");
                c.bend_angles_rad.push_back(b.get<double>());
            }
        }
        else
            throw ConfigError("'bend_angle_rad' must be a number or a non-empty list");
        for (double b : c.bend_angles_rad)
            if (!(b >= 0.0 && b <= 0.5 * pi))
                throw ConfigError("bend angle " + std::to_string(b) + " outside [0, pi/2]");

        const bool has_wl = j.contains("wavelength_m"), has_f = j.contains("frequency_hz");
        if (has_wl == has_f)
            throw ConfigError("exactly one of 'wavelength_m' and 'frequency_hz' must be given");
        if (has_wl)
            c.wavelength_m = positive_number(j, "wavelength_m");
        else
            c.frequency_hz = positive_number(j, "frequency_hz");

        if (j.contains("oracle"))
        {
            const auto &o = j["oracle"];
            if (!o.is_object())
                throw ConfigError("'oracle' must be an object");
            for (const auto &item : o.items())
                if (item.key() != "order" && item.key() != "tolerance" && item.key() != "max_doublings")
                    throw ConfigError("unknown oracle key '" + item.key() + "'");
            if (o.contains("order"))
                c.oracle.order = count(o, "order", 1);
            if (o.contains("tolerance"))
                c.oracle.tolerance = positive_number(o, "tolerance");
            if (o.contains("max_doublings"))
                c.oracle.max_doublings = count(o, "max_doublings", 0);
            try
            {
                c.oracle.check();
            }
            catch (const DomainError &e)
            {
                throw ConfigError(e.what());
            }
        }

        if (j.contains("dof_thresholds"))
        {
            const auto &t = j["dof_thresholds"];
            if (!t.is_array() || t.empty())
                throw ConfigError("'dof_thresholds' must be a non-empty list");
            c.dof_thresholds.clear();
            for (const auto &v : t)
            {
                if (!v.is_number() || !(v.get<double>() > 0.0 && v.get<double>() < 1.0))
                    throw ConfigError("'dof_thresholds' entries must lie in (0, 1)");
                c.dof_thresholds.push_back(v.get<double>());
            }
        }

        if (j.contains("output_dir"))
        {
            if (!j["output_dir"].is_string())
                throw ConfigError("'output_dir' must be a string");
            c.output_dir = j["output_dir"].get<std::string>();
        }
        if (j.contains("seed"))
        {
            if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0)
                throw ConfigError("'seed' must be a non-negative integer");
            c.seed = j["seed"].get<std::uint64_t>();
        }
        if (j.contains("pair_samples"))
            c.pair_samples = count(j, "pair_samples", 1);
        if (j.contains("validation_bound"))
            c.validation_bound = positive_number(j, "validation_bound");
        if (j.contains("spectrum_source"))
        {
            const std::string s = j["spectrum_source"].is_string() ? j["spectrum_source"].get<std::string>() : "";
            if (s == "closed")
                c.spectrum_source = SpectrumSource::closed;
            else if (s == "oracle")
                c.spectrum_source = SpectrumSource::oracle;
            else
                throw ConfigError("'spectrum_source' must be \"closed\" or \"oracle\"");
        }
        return c;
    }

    inline ExperimentConfig load_config(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot open config file '" + path.string() + "'");
        nlohmann::json j;
        try
        {
            j = nlohmann::json::parse(in);
        }
        catch (const nlohmann::json::parse_error &e)
        {
            throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
        }
        return parse_config(j);
    }

    inline nlohmann::json to_json(const ExperimentConfig &c)
    {
        nlohmann::json j;
        j["array_type"] = c.array_type == ArrayType::ula ? "ula" : "ura";
        if (c.array_type == ArrayType::ula)
            j["n_elements"] = c.n_elements;
        else
        {
            j["rows"] = c.rows;
            j["per_arc"] = c.per_arc;
            j["row_spacing_m"] = c.row_spacing_m;
        }
        j["arc_length_m"] = c.arc_length_m;
        if (c.bend_angles_rad.size() == 1)
            j["bend_angle_rad"] = c.bend_angles_rad.front();
        else
            j["bend_angle_rad"] = c.bend_angles_rad;
        if (c.wavelength_m)
            j["wavelength_m"] = *c.wavelength_m;
        else
            j["frequency_hz"] = *c.frequency_hz;
        j["oracle"] = {{"order", c.oracle.order}, {"tolerance", c.oracle.tolerance}, {"max_doublings", c.oracle.max_doublings}};
        j["dof_thresholds"] = c.dof_thresholds;
        j["output_dir"] = c.output_dir;
        j["seed"] = c.seed;
        j["pair_samples"] = c.pair_samples;
        j["validation_bound"] = c.validation_bound;
        j["spectrum_source"] = c.spectrum_source == SpectrumSource::closed ? "closed" : "oracle";
        return j;
    }

    // ----- serialisation ------------------------------------------------------------

    // Shortest decimal form that round-trips (at most 17 significant digits)
    inline void append_number(std::string &out, double v)
    {
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof(buf), v);
        out.append(buf, res.ptr);
    }

    inline std::string format_number(double v)
    {
        std::string s;
        append_number(s, v);
        return s;
    }

    // "1e-2" for exact powers of ten, the shortest round-trip form otherwise
    inline std::string threshold_label(double tau)
    {
        const double e = std::round(std::log10(tau));
        if (std::pow(10.0, e) == tau)
            return "1e" + std::to_string(static_cast<int>(e));
        return format_number(tau);
    }

    inline nlohmann::json geometry_json(const Geometry &g)
    {
        nlohmann::json j;
        std::visit(
            [&](const auto &geo)
            {
                using G = std::decay_t<decltype(geo)>;
                if constexpr (std::is_same_v<G, ArchedUlaGeometry>)
                {
                    j["array_type"] = "ula";
                    j["n_elements"] = geo.size();
                }
                else
                {
                    j["array_type"] = "ura";
                    j["rows"] = geo.rows();
                    j["per_arc"] = geo.per_arc();
                    j["row_spacing_m"] = geo.row_spacing();
                }
                j["arc_length_m"] = geo.arc_length();
                j["bend_angle_rad"] = geo.bend_angle();
                j["wavelength_m"] = geo.wavelength();
                j["radius_m"] = geo.radius() ? nlohmann::json(*geo.radius()) : nlohmann::json(nullptr);
            },
            g);
        return j;
    }

    inline nlohmann::json to_json(const DofReport &r)
    {
        nlohmann::json counts = nlohmann::json::object();
        for (const auto &[tau, n] : r.threshold_counts)
            counts[threshold_label(tau)] = n;
        return {{"beta", r.beta},
                {"dim", r.dim},
                {"threshold_counts", counts},
                {"effective_rank", r.effective_rank},
                {"asymptote", r.asymptote},
                {"max_eigenvalue", r.max_eigenvalue},
                {"min_eigenvalue", r.min_eigenvalue}};
    }

    inline constexpr const char *sign_convention_note =
        "imaginary parts follow exp(+j*Delta_{m,n}) with Delta from phase_delta_ula for ULA pairs, and "
        "exp(-j*k*(A cos(phi) + B sin(phi) + C)) with (A,B,C) from ura_abc for URA pairs";

    inline nlohmann::json to_json(const ValidationReport &r, const Geometry &g, double bound,
                                  const std::vector<double> &odd_series = {})
    {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t k = 0; k < r.pairs.size(); ++k)
        {
            const PairCheck &p = r.pairs[k];
            nlohmann::json row{{"i", p.i},
                               {"j", p.j},
                               {"closed", p.closed},
                               {"oracle_re", p.oracle_re},
                               {"oracle_im", p.oracle_im},
                               {"abs_real_error", p.real_error()},
                               {"quadrature_order", p.order}};
            if (const auto *ura = std::get_if<ArchedUraGeometry>(&g))
            {
                const UraIndex a = ura->unflat(p.i), b = ura->unflat(p.j);
                row["p"] = {a.row, a.col};
                row["q"] = {b.row, b.col};
            }
            if (k < odd_series.size())
                row["odd_series"] = odd_series[k];
            rows.push_back(std::move(row));
        }
        return {{"geometry", geometry_json(g)},
                {"pairs", r.pairs.size()},
                {"exhaustive", r.exhaustive},
                {"max_abs_real_error", r.max_abs_real_error},
                {"max_abs_imag_part", r.max_abs_imag_part},
                {"quadrature_order", r.quadrature_order},
                {"seed", r.seed},
                {"bound", bound},
                {"passed", r.max_abs_real_error < bound},
                {"sign_convention", sign_convention_note},
                {"per_pair", rows}};
    }

    // Writes to a sibling temporary file, then renames over the target
    inline void write_atomic(const std::filesystem::path &path, const std::string &content)
    {
        std::filesystem::path tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::filesystem::filesystem_error("cannot open for writing", tmp,
                                                        std::make_error_code(std::errc::permission_denied));
            out.write(content.data(), static_cast<std::streamsize>(content.size()));
            if (!out)
                throw std::filesystem::filesystem_error("write failed", tmp, std::make_error_code(std::errc::io_error));
        }
        std::filesystem::rename(tmp, path);
    }

    inline std::string matrix_csv(const RealCorrelation &r)
    {
        std::string out = "row,col,value\n";
        out.reserve(out.size() + r.dim() * r.dim() * 28);
        for (std::size_t i = 0; i < r.dim(); ++i)
            for (std::size_t j = 0; j < r.dim(); ++j)
            {
                out += std::to_string(i);
                out += ',';
                out += std::to_string(j);
                out += ',';
                append_number(out, r(i, j));
                out += '\n';
            }
        return out;
    }

    inline std::string spectrum_csv(const EigenSpectrum &s)
    {
        std::string out = "index,eigenvalue\n";
        for (std::size_t i = 0; i < s.values.size(); ++i)
        {
            out += std::to_string(i + 1);
            out += ',';
            append_number(out, s.values[i]);
            out += '\n';
        }
        return out;
    }

    // ----- commands -----------------------------------------------------------------

    struct RunContext
    {
        std::filesystem::path out_dir;
        std::size_t threads = 0; // 0: all hardware threads
    };

    struct RunResult
    {
        int exit_code = 0;
        std::vector<std::string> files; // relative to out_dir, manifest last
        std::string message;
    };

    namespace detail
    {
        inline std::string utc_now()
        {
            const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            std::tm tm{};
            gmtime_r(&t, &tm);
            std::ostringstream s;
            s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
            return s.str();
        }

        inline double single_beta(const ExperimentConfig &c, const std::string &command)
        {
            if (c.bend_angles_rad.size() != 1)
                throw ConfigError(command + " needs a single bend angle; pass --bend_angle_rad <value>");
            return c.bend_angles_rad.front();
        }

        inline double asymptote(const ExperimentConfig &c)
        {
            return c.array_type == ArrayType::ula ? asymptotic_dof_ula(c.arc_length_m, c.wavelength())
                                                  : asymptotic_dof_ura(c.arc_length_m, c.wavelength());
        }

        inline RealCorrelation closed_matrix(const Geometry &g, std::size_t threads)
        {
            return std::visit(
                [&](const auto &geo)
                {
                    if constexpr (std::is_same_v<std::decay_t<decltype(geo)>, ArchedUlaGeometry>)
                        return corr_ula_matrix(geo, threads);
                    else
                        return corr_ura_matrix(geo, threads);
                },
                g);
        }

        inline EigenSpectrum spectrum_for(const ExperimentConfig &c, const Geometry &g, std::size_t threads)
        {
            if (c.spectrum_source == SpectrumSource::closed)
                return eigen_spectrum(closed_matrix(g, threads));
            return std::visit(
                [&](const auto &geo)
                {
                    if constexpr (std::is_same_v<std::decay_t<decltype(geo)>, ArchedUlaGeometry>)
                        return eigen_spectrum(oracle_ula_matrix(geo, c.oracle, threads));
                    else
                        return eigen_spectrum(oracle_ura_matrix(geo, c.oracle, threads));
                },
                g);
        }

        class ArtifactWriter
        {
        public:
            ArtifactWriter(const ExperimentConfig &c, const RunContext &ctx, std::string command)
                : config_(c), dir_(ctx.out_dir), command_(std::move(command)), started_(utc_now())
            {
                std::filesystem::create_directories(dir_);
            }

            void write(const std::string &name, const std::string &content)
            {
                write_atomic(dir_ / name, content);
                files_.push_back(name);
            }

            std::vector<std::string> finish()
            {
                nlohmann::json m{{"tool", "arched"},
                                 {"version", tool_version},
                                 {"command", command_},
                                 {"config", to_json(config_)},
                                 {"files", files_},
                                 {"started_utc", started_},
                                 {"finished_utc", utc_now()}};
                write_atomic(dir_ / "manifest.json", m.dump(2) + "\n");
                files_.push_back("manifest.json");
                return files_;
            }

        private:
            const ExperimentConfig &config_;
            std::filesystem::path dir_;
            std::string command_;
            std::string started_;
            std::vector<std::string> files_;
        };
    }

    // corr.csv: closed-form matrix
    inline RunResult cmd_corr(const ExperimentConfig &c, const RunContext &ctx)
    {
        const Geometry g = make_geometry(c, detail::single_beta(c, "corr"));
        const RealCorrelation r = detail::closed_matrix(g, ctx.threads);
        detail::ArtifactWriter w(c, ctx, "corr");
        w.write("corr.csv", matrix_csv(r));
        return {0, w.finish(), "wrote " + std::to_string(r.dim()) + "x" + std::to_string(r.dim()) + " correlation matrix"};
    }

    // spectrum.csv and dof.json
    inline RunResult cmd_spectrum(const ExperimentConfig &c, const RunContext &ctx)
    {
        const double beta = detail::single_beta(c, "spectrum");
        const Geometry g = make_geometry(c, beta);
        const EigenSpectrum s = detail::spectrum_for(c, g, ctx.threads);
        const DofReport rep = dof_report(s, c.dof_thresholds, detail::asymptote(c), beta);

        nlohmann::json dof = to_json(rep);
        dof["array_type"] = c.array_type == ArrayType::ula ? "ula" : "ura";
        dof["source"] = c.spectrum_source == SpectrumSource::closed ? "closed" : "oracle";

        detail::ArtifactWriter w(c, ctx, "spectrum");
        w.write("spectrum.csv", spectrum_csv(s));
        w.write("dof.json", dof.dump(2) + "\n");
        return {0, w.finish(), "spectrum of dimension " + std::to_string(s.dim())};
    }

    // sweep.csv (one row per bend angle) and sweep_spectra.csv (plot-ready spectra)
    inline RunResult cmd_sweep(const ExperimentConfig &c, const RunContext &ctx)
    {
        std::string table = "beta";
        for (double tau : c.dof_thresholds)
            table += ",dof_tau_" + threshold_label(tau);
        table += ",effective_rank,asymptote\n";
        std::string spectra = "beta,index,eigenvalue\n";

        const double asym = detail::asymptote(c);
        for (double beta : c.bend_angles_rad)
        {
            const Geometry g = make_geometry(c, beta);
            const EigenSpectrum s = detail::spectrum_for(c, g, ctx.threads);
            const DofReport rep = dof_report(s, c.dof_thresholds, asym, beta);

            append_number(table, beta);
            for (double tau : c.dof_thresholds)
                table += "," + std::to_string(rep.threshold_counts.at(tau));
            table += ",";
            append_number(table, rep.effective_rank);
            table += ",";
            append_number(table, rep.asymptote);
            table += "\n";

            for (std::size_t i = 0; i < s.values.size(); ++i)
            {
                append_number(spectra, beta);
                spectra += "," + std::to_string(i + 1) + ",";
                append_number(spectra, s.values[i]);
                spectra += "\n";
            }
        }

        detail::ArtifactWriter w(c, ctx, "sweep");
        w.write("sweep.csv", table);
        w.write("sweep_spectra.csv", spectra);
        return {0, w.finish(), "swept " + std::to_string(c.bend_angles_rad.size()) + " bend angles"};
    }

    // Odd-order residual cut-off reported alongside ULA validation
    inline constexpr int validation_odd_k_max = 61;

    // validation.json; exit code 1 when the max real error reaches the bound
    inline RunResult cmd_validate(const ExperimentConfig &c, const RunContext &ctx)
    {
        const Geometry g = make_geometry(c, detail::single_beta(c, "validate"));
        ValidationReport rep;
        std::vector<double> odd;
        if (const auto *ula = std::get_if<ArchedUlaGeometry>(&g))
        {
            rep = validate(*ula, c.pair_samples, c.oracle, c.seed, ctx.threads);
            const QuadratureLadder ladder(c.oracle);
            odd.resize(rep.pairs.size());
            parallel_for(rep.pairs.size(), ctx.threads, [&](std::size_t k)
            {
                odd[k] = odd_term_series_ula(*ula, rep.pairs[k].i, rep.pairs[k].j, validation_odd_k_max, ladder).value;
            });
        }
        else
            rep = validate(std::get<ArchedUraGeometry>(g), c.pair_samples, c.oracle, c.seed, ctx.threads);

        detail::ArtifactWriter w(c, ctx, "validate");
        w.write("validation.json", to_json(rep, g, c.validation_bound, odd).dump(2) + "\n");
        const bool ok = rep.max_abs_real_error < c.validation_bound;
        std::ostringstream msg;
        msg.precision(3);
        msg << "max |closed - Re(oracle)| = " << rep.max_abs_real_error << " over " << rep.pairs.size() << " pairs, bound "
            << c.validation_bound << (ok ? " (pass)" : " (FAIL)");
        return {ok ? 0 : 1, w.finish(), msg.str()};
    }

    enum class Command
    {
        corr,
        spectrum,
        sweep,
        validate
    };

    // Runs a command and maps failures onto exit codes:
    // 0 success, 1 validation failure, 2 usage/config error, 3 numeric failure.
    inline RunResult run_command(Command cmd, const ExperimentConfig &c, const RunContext &ctx, std::ostream &err)
    {
        try
        {
            switch (cmd)
            {
            case Command::corr: return cmd_corr(c, ctx);
            case Command::spectrum: return cmd_spectrum(c, ctx);
            case Command::sweep: return cmd_sweep(c, ctx);
            case Command::validate: return cmd_validate(c, ctx);
            }
        }
        catch (const ConfigError &e)
        {
            err << "config error: " << e.what() << "\n";
            return {2, {}, e.what()};
        }
        catch (const DomainError &e)
        {
            err << "config error: " << e.what() << "\n";
            return {2, {}, e.what()};
        }
        catch (const ResourceError &e)
        {
            err << "config error: " << e.what() << "\n";
            return {2, {}, e.what()};
        }
        catch (const NumericError &e)
        {
            err << "numeric failure: " << e.what() << "\n";
            return {3, {}, e.what()};
        }
        catch (const std::filesystem::filesystem_error &e)
        {
            err << "output error: " << e.what() << "\n";
            return {2, {}, e.what()};
        }
        return {2, {}, "unknown command"};
    }
}

#endif
