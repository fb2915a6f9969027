#include "weylkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylkit/equivariant.hpp"
#include "weylkit/gkz.hpp"
#include "weylkit/parse.hpp"
#include "weylkit/reduction.hpp"

namespace weylkit {

namespace {

using Json = nlohmann::ordered_json;

Json int_value(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Json rat_list(const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_value(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json ops_json(const std::vector<WeylOp>& ops) {
    Json a = Json::array();
    for (const auto& p : ops) a.push_back(p.str());
    return a;
}

Json polys_json(const std::vector<Poly>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(p.str());
    return a;
}

Json dim_json(const std::optional<int>& d) {
    if (!d) return Json("empty");
    return Json(*d);
}

Json involutivity_json(const InvolutivityReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    j["pairs_checked"] = rep.pairs_checked;
    Json fails = Json::array();
    for (const auto& f : rep.failures) {
        Json e;
        e["pair"] = Json::array({f.a, f.b});
        e["bracket_normal_form"] = f.bracket_normal_form.str();
        fails.push_back(std::move(e));
    }
    j["failures"] = std::move(fails);
    return j;
}

Json charvar_json(const CharReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["weyl_basis"] = ops_json(*rep.ideal.basis);
    j["gr_ideal"] = polys_json(rep.graded.basis->polys);
    j["krull_dim"] = dim_json(rep.dimension);
    j["module_is_zero"] = rep.module_is_zero;
    j["bernstein_ok"] = rep.bernstein_ok;
    j["holonomic"] = rep.holonomic;
    j["connection"] = rep.connection_like;
    j["involutivity"] = involutivity_json(rep.involutivity);
    return j;
}

Json strata_json(const StrataReport& rep) {
    Json j;
    j["count"] = rep.strata.size();
    Json items = Json::array();
    for (const auto& st : rep.strata) {
        Json e;
        Json support = Json::array();
        for (auto s : st.support) support.push_back(s + 1);  // 1-based report
        e["support"] = std::move(support);
        e["witness"] = rat_list(st.witness);
        e["conormal_basis"] = polys_json(st.conormal.basis->polys);
        e["dimension"] = dim_json(st.dimension);
        items.push_back(std::move(e));
    }
    j["items"] = std::move(items);
    return j;
}

bool is_scalar_array(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (e.is_object() || e.is_array()) return false;
    return true;
}

std::string scalar_str(const Json& e) {
    return e.is_string() ? e.get<std::string>() : e.dump();
}

// Human text is rendered from the structured document, never assembled
// separately.
void render_human(const Json& j, std::ostream& out, int indent = 0) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object()) {
                out << pad << k << ":\n";
                render_human(v, out, indent + 1);
            } else if (v.is_array() && !v.empty() && !is_scalar_array(v)) {
                out << pad << k << ":\n";
                for (const auto& e : v) {
                    if (is_scalar_array(e)) {
                        out << pad << "  - " << e.dump() << "\n";
                    } else {
                        out << pad << "  -\n";
                        render_human(e, out, indent + 2);
                    }
                }
            } else if (v.is_array()) {
                out << pad << k << ":";
                if (v.empty()) out << " (none)\n";
                else {
                    out << "\n";
                    for (const auto& e : v) out << pad << "  - " << scalar_str(e) << "\n";
                }
            } else {
                out << pad << k << ": " << scalar_str(v) << "\n";
            }
        }
    } else {
        out << pad << scalar_str(j) << "\n";
    }
}

void emit(const Json& j, bool as_json, std::ostream& out) {
    if (as_json) {
        out << j.dump(2) << "\n";
    } else {
        render_human(j, out);
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw parse_error("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

IntMatrix matrix_from_json(const Json& rows, const char* what) {
    if (!rows.is_array() || rows.empty()) throw parse_error(std::string(what) + " must be a non-empty array of rows");
    std::vector<std::vector<long>> data;
    for (const auto& row : rows) {
        if (!row.is_array()) throw parse_error(std::string(what) + " rows must be arrays");
        std::vector<long> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw parse_error(std::string(what) + " entries must be integers");
            r.push_back(v.get<long>());
        }
        data.push_back(std::move(r));
    }
    return IntMatrix::from_rows(data);
}

std::vector<Rat> rats_from_json(const Json& arr, const char* what) {
    if (!arr.is_array()) throw parse_error(std::string(what) + " must be an array");
    std::vector<Rat> out;
    for (const auto& v : arr) {
        if (v.is_number_integer()) {
            out.push_back(Rat(v.get<long>()));
        } else if (v.is_string()) {
            auto r = Rat::parse(v.get<std::string>());
            if (!r) throw parse_error(std::string(what) + ": bad rational '" + v.get<std::string>() + "'");
            out.push_back(*r);
        } else {
            throw parse_error(std::string(what) + " entries must be integers or 'p/q' strings");
        }
    }
    return out;
}

struct ChiDocument {
    IntMatrix chi;
    std::optional<std::vector<Rat>> lambda;
};

void reject_unknown_fields(const Json& j, std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (k == a) known = true;
        if (!known) throw parse_error("unknown field '" + k + "' in input document");
    }
}

ChiDocument load_chi(const std::string& path) {
    Json j = load_json_file(path);
    reject_unknown_fields(j, {"chi", "lambda"});
    if (!j.contains("chi")) throw parse_error("input document needs a 'chi' field");
    ChiDocument doc;
    doc.chi = matrix_from_json(j["chi"], "chi");
    if (j.contains("lambda")) doc.lambda = rats_from_json(j["lambda"], "lambda");
    return doc;
}

std::size_t ambient_dim(const std::string& ops_text, std::size_t flag_n) {
    if (flag_n > 0) return flag_n;
    std::size_t n = scan_max_index(ops_text);
    if (n == 0) throw parse_error("cannot infer ambient dimension; pass --n");
    return n;
}

GkzData gkz_data_from_flags(const std::string& chi_path, const std::string& lambda_csv) {
    ChiDocument doc = load_chi(chi_path);
    std::vector<Rat> lambda;
    if (!lambda_csv.empty()) lambda = parse_rat_csv(lambda_csv);
    else if (doc.lambda) lambda = *doc.lambda;
    else lambda.assign(doc.chi.rows(), Rat(0));
    return make_gkz_data(std::move(doc.chi), std::move(lambda));
}

MonomialOrder order_from_flags(const std::string& name, const std::string& weights_csv,
                               std::size_t nvars) {
    if (name == "lex") return MonomialOrder::lex_order();
    if (name == "degrevlex") return MonomialOrder::degrevlex();
    if (name == "weighted") {
        if (weights_csv.empty()) throw parse_error("--order weighted needs --weights");
        std::vector<long> w;
        for (const auto& r : parse_rat_csv(weights_csv)) {
            if (!r.is_integer()) throw parse_error("weights must be integers");
            w.push_back(r.num().get_si());
        }
        if (w.size() != nvars) throw parse_error("one weight per variable required");
        return MonomialOrder::weighted(std::move(w));
    }
    throw parse_error("unknown order '" + name + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"weylkit: exact D-module computations over the Weyl algebra"};
    app.require_subcommand(1);
    bool as_json = false;
    int threads = 0;
    app.add_flag("--json", as_json, "structured JSON report");
    app.add_option("--threads", threads, "worker thread cap for parallel scans");

    std::string chi_path, lambda_csv, lambda_cap_csv, ops_text, polys_text;
    std::string order_name = "degrevlex", weights_csv, gens_kind = "basis";
    std::string action_path, poly_arg, power_csv, coeff_str = "1";
    std::size_t flag_n = 0;
    long series_count = 8;
    bool l1 = false, compare_gr = false;

    auto* gkz_cmd = app.add_subcommand("gkz", "build a torus system and report verdicts");
    gkz_cmd->add_option("--chi", chi_path, "input document")->required();
    gkz_cmd->add_option("--lambda", lambda_csv, "parameter vector as p/q csv");
    gkz_cmd->add_flag("--compare-gr", compare_gr, "also compare the bound ideal with gr I");

    auto* charvar_cmd = app.add_subcommand("charvar", "characteristic variety report");
    charvar_cmd->add_option("--ops", ops_text, "operators, ';' separated")->required();
    charvar_cmd->add_option("--n", flag_n, "ambient dimension (default: inferred)");

    auto* gb_cmd = app.add_subcommand("gb", "reduced commutative Groebner basis");
    gb_cmd->add_option("--polys", polys_text, "polynomials in z<i>/xi<i>, ';' separated")->required();
    gb_cmd->add_option("--n", flag_n, "symplectic size (default: inferred)");
    gb_cmd->add_option("--order", order_name, "lex | degrevlex | weighted");
    gb_cmd->add_option("--weights", weights_csv, "weights for --order weighted");

    auto* wgb_cmd = app.add_subcommand("wgb", "reduced left Groebner basis in the Weyl algebra");
    wgb_cmd->add_option("--ops", ops_text, "operators, ';' separated")->required();
    wgb_cmd->add_option("--n", flag_n, "ambient dimension (default: inferred)");
    wgb_cmd->add_option("--order", order_name, "must be the d-degree-compatible weighted order");
    wgb_cmd->add_option("--weights", weights_csv, "weights for --order weighted");

    auto* fourier_cmd = app.add_subcommand("fourier", "Fourier transform of operators");
    fourier_cmd->add_option("--ops", ops_text, "operators, ';' separated")->required();
    fourier_cmd->add_option("--n", flag_n, "ambient dimension (default: inferred)");

    auto* adjoint_cmd = app.add_subcommand("adjoint", "formal adjoint of operators");
    adjoint_cmd->add_option("--ops", ops_text, "operators, ';' separated")->required();
    adjoint_cmd->add_option("--n", flag_n, "ambient dimension (default: inferred)");

    auto* reduce_cmd = app.add_subcommand("reduce", "reduction to the quotient torus");
    reduce_cmd->add_option("--chi", chi_path, "input document")->required();
    reduce_cmd->add_option("--lambda", lambda_csv, "parameter vector as p/q csv");
    reduce_cmd->add_option("--Lambda", lambda_cap_csv, "override of the lift, p/q csv");
    reduce_cmd->add_option("--gens", gens_kind, "basis | toric lattice generators");
    reduce_cmd->add_flag("--l1", l1, "one-variable specialization with pFq readout");
    reduce_cmd->add_option("--series", series_count, "series terms reported with --l1");

    auto* check_cmd = app.add_subcommand("check-equivariance",
                                         "stability, character, homogeneity checks");
    check_cmd->add_option("--action", action_path, "action document")->required();

    auto* apply_cmd = app.add_subcommand("apply", "apply an operator");
    apply_cmd->add_option("--ops", ops_text, "operator")->required();
    apply_cmd->add_option("--poly", poly_arg, "polynomial argument");
    apply_cmd->add_option("--power", power_csv, "twisted power exponents, p/q csv");
    apply_cmd->add_option("--coeff", coeff_str, "twisted power coefficient");
    apply_cmd->add_option("--n", flag_n, "ambient dimension (default: inferred)");

    // --json / --threads are accepted after any subcommand name
    for (auto* sub : {gkz_cmd, charvar_cmd, gb_cmd, wgb_cmd, fourier_cmd, adjoint_cmd,
                      reduce_cmd, check_cmd, apply_cmd})
        sub->fallthrough();

    try {
        std::vector<std::string> argv = args;
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help() << "\n";
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    par::set_threads(threads);
    par::Exec exec = par::default_exec();

    try {
        Json rep;
        rep["schema"] = "weylkit.report/1";

        if (app.got_subcommand(gkz_cmd)) {
            rep["command"] = "gkz";
            GkzData data = gkz_data_from_flags(chi_path, lambda_csv);
            GkzSystem sys = build_gkz(data);
            GkzVerdicts v = gkz_verdicts(sys, exec);
            rep["n"] = data.n();
            rep["N"] = data.N();
            rep["chi"] = matrix_json(data.chi);
            rep["lambda"] = rat_list(data.lambda);
            Json w = Json::array();
            for (const auto& c : data.witness) w.push_back(int_value(c));
            rep["homogeneity_witness"] = std::move(w);
            rep["lattice_basis"] = matrix_json(data.lattice);
            rep["euler_ops"] = ops_json(sys.euler_ops);
            rep["box_ops"] = ops_json(sys.box_ops);
            rep["toric_generators"] = polys_json(sys.toric.basis->polys);
            Json bound;
            bound["reduced_basis"] = polys_json(v.bound_A.basis->polys);
            bound["krull_dim"] = dim_json(v.dim_A);
            rep["bound_ideal"] = std::move(bound);
            rep["strata"] = strata_json(v.strata);
            Json verdicts;
            verdicts["homogeneous"] = v.homogeneous;
            verdicts["stability"] = v.stability_pass;
            verdicts["finite_orbits"] = v.finite_orbits;
            verdicts["holonomic"] = v.holonomic;
            verdicts["regular_holonomic"] = v.regular_holonomic;
            verdicts["involutivity"] = involutivity_json(v.involutivity_A);
            rep["verdicts"] = std::move(verdicts);
            if (compare_gr) {
                GrComparison cmp = compare_bound_with_gr(sys);
                Json c;
                c["bound_contained_in_gr"] = cmp.a_contained_in_gr;
                c["gr_contained_in_bound"] = cmp.gr_contained_in_a;
                c["equal"] = cmp.equal;
                rep["gr_comparison"] = std::move(c);
            }
        } else if (app.got_subcommand(charvar_cmd)) {
            rep["command"] = "charvar";
            std::size_t n = ambient_dim(ops_text, flag_n);
            auto ops = parse_weyl_ops(ops_text, n);
            CharReport cr = characteristic_report(WIdeal::make(n, std::move(ops)), exec);
            rep.update(charvar_json(cr));
        } else if (app.got_subcommand(gb_cmd)) {
            rep["command"] = "gb";
            std::size_t n = ambient_dim(polys_text, flag_n);
            RingPtr ring = PolyRing::symplectic(n);
            auto polys = parse_polys(polys_text, ring);
            MonomialOrder ord = order_from_flags(order_name, weights_csv, ring->nvars());
            CIdeal gb = groebner(CIdeal::make(ring, std::move(polys)), ord);
            rep["order"] = ord.name();
            rep["reduced_basis"] = polys_json(gb.basis->polys);
        } else if (app.got_subcommand(wgb_cmd)) {
            rep["command"] = "wgb";
            std::size_t n = ambient_dim(ops_text, flag_n);
            auto ops = parse_weyl_ops(ops_text, n);
            WIdeal gb;
            if (order_name == "degrevlex" && weights_csv.empty() &&
                !wgb_cmd->count("--order")) {
                gb = weyl_groebner(WIdeal::make(n, std::move(ops)));
            } else {
                MonomialOrder ord = order_from_flags(order_name, weights_csv, 2 * n);
                gb = weyl_groebner(WIdeal::make(n, std::move(ops)), ord);
            }
            rep["n"] = n;
            rep["reduced_basis"] = ops_json(*gb.basis);
            rep["is_unit"] = gb.is_unit();
        } else if (app.got_subcommand(fourier_cmd)) {
            rep["command"] = "fourier";
            std::size_t n = ambient_dim(ops_text, flag_n);
            auto ops = parse_weyl_ops(ops_text, n);
            std::vector<WeylOp> image;
            for (const auto& p : ops) image.push_back(fourier_transform(p));
            rep["n"] = n;
            rep["ops"] = ops_json(ops);
            rep["image"] = ops_json(image);
        } else if (app.got_subcommand(adjoint_cmd)) {
            rep["command"] = "adjoint";
            std::size_t n = ambient_dim(ops_text, flag_n);
            auto ops = parse_weyl_ops(ops_text, n);
            std::vector<WeylOp> image;
            for (const auto& p : ops) image.push_back(formal_adjoint(p));
            rep["n"] = n;
            rep["ops"] = ops_json(ops);
            rep["image"] = ops_json(image);
        } else if (app.got_subcommand(reduce_cmd)) {
            rep["command"] = "reduce";
            GkzData data = gkz_data_from_flags(chi_path, lambda_csv);
            std::optional<std::vector<Rat>> cap;
            if (!lambda_cap_csv.empty()) cap = parse_rat_csv(lambda_cap_csv);
            ReductionData rd;
            if (gens_kind == "basis") {
                rd = reduce(data, cap);
            } else if (gens_kind == "toric") {
                GkzSystem sys = build_gkz(data);
                rd = reduce(data, sys.box_vectors, cap);
            } else {
                throw parse_error("--gens must be basis or toric");
            }
            rep["n"] = data.n();
            rep["N"] = data.N();
            rep["l"] = rd.pi.cols();
            rep["Lambda"] = rat_list(rd.capital_lambda);
            rep["pi"] = matrix_json(rd.pi);
            Json ops = Json::array();
            for (const auto& op : rd.operators) {
                Json e;
                Json vec = Json::array();
                for (const auto& x : op.lattice_vector) vec.push_back(int_value(x));
                e["lattice_vector"] = std::move(vec);
                e["operator"] = op.op.str();
                ops.push_back(std::move(e));
            }
            rep["operators"] = std::move(ops);
            if (l1) {
                PfqReport fq = fuchsian_l1(rd);
                Json f;
                f["p"] = fq.p;
                f["pfq_form"] = fq.pfq_form;
                f["upper"] = rat_list(fq.upper);
                f["lower"] = rat_list(fq.lower);
                f["argument_scale"] = fq.argument_scale.str();
                if (!fq.note.empty()) f["note"] = fq.note;
                f["raw_plus"] = rat_list(fq.raw_plus);
                f["raw_minus"] = rat_list(fq.raw_minus);
                f["operator"] = fq.rendering;
                SeriesRecurrence rec = SeriesRecurrence::from_op(fq.normalized);
                Json ratios = Json::array();
                for (long m = 0; m < series_count; ++m) {
                    auto r = rec.ratio(m);
                    ratios.push_back(r ? Json(r->str()) : Json("obstruction"));
                }
                f["series_ratios"] = std::move(ratios);
                auto coeffs = rec.coefficients(series_count);
                f["series_coefficients"] = rat_list(coeffs.values);
                if (coeffs.obstruction_at)
                    f["obstruction_at"] = *coeffs.obstruction_at;
                rep["l1"] = std::move(f);
            }
        } else if (app.got_subcommand(check_cmd)) {
            rep["command"] = "check-equivariance";
            Json doc = load_json_file(action_path);
            reject_unknown_fields(doc, {"basis", "matrices", "structure", "lambda", "constgens"});
            LinearAction action;
            if (doc.contains("basis"))
                for (const auto& b : doc["basis"]) action.names.push_back(b.get<std::string>());
            if (!doc.contains("matrices")) throw parse_error("action document needs 'matrices'");
            for (const auto& m : doc["matrices"]) {
                std::vector<std::vector<Rat>> rows;
                for (const auto& r : m) rows.push_back(rats_from_json(r, "matrix row"));
                action.matrices.push_back(std::move(rows));
            }
            if (action.names.empty())
                for (std::size_t i = 0; i < action.matrices.size(); ++i)
                    action.names.push_back("theta" + std::to_string(i + 1));
            if (doc.contains("structure")) {
                std::vector<std::vector<std::vector<Rat>>> st;
                for (const auto& plane : doc["structure"]) {
                    std::vector<std::vector<Rat>> rows;
                    for (const auto& r : plane) rows.push_back(rats_from_json(r, "structure row"));
                    st.push_back(std::move(rows));
                }
                action.structure = std::move(st);
            }
            std::vector<Rat> lambda(action.basis_size(), Rat(0));
            if (doc.contains("lambda")) lambda = rats_from_json(doc["lambda"], "lambda");
            std::vector<WeylOp> constgens;
            std::size_t n = action.dim();
            if (doc.contains("constgens"))
                for (const auto& g : doc["constgens"])
                    constgens.push_back(parse_weyl_op(g.get<std::string>(), n));
            auto fields = fields_from_action(action);
            StabilityReport stab = stability_check(fields, constgens);
            EquivariantSystem sys = assemble(fields, lambda, constgens);
            HomogeneityReport hom = homogeneity_report(sys);
            rep["n"] = n;
            rep["fields"] = ops_json(fields);
            rep["lambda"] = rat_list(lambda);
            rep["constgens"] = ops_json(constgens);
            Json st;
            st["pass"] = stab.pass;
            Json pairs = Json::array();
            for (const auto& p : stab.pairs) {
                Json e;
                e["field"] = action.names[p.field];
                e["gen"] = p.gen;
                e["pass"] = p.pass;
                if (!p.pass) e["bracket"] = p.bracket.str();
                pairs.push_back(std::move(e));
            }
            st["pairs"] = std::move(pairs);
            rep["stability"] = std::move(st);
            if (action.structure)
                rep["character_ok"] = character_check(action, lambda);
            Json hm;
            Json degs = Json::array();
            for (const auto& d : hom.degrees)
                degs.push_back(d ? Json(*d) : Json("inhomogeneous"));
            hm["generator_degrees"] = std::move(degs);
            hm["homogeneous"] = hom.homogeneous;
            rep["homogeneity"] = std::move(hm);
        } else if (app.got_subcommand(apply_cmd)) {
            rep["command"] = "apply";
            std::size_t n = ambient_dim(ops_text + " " + poly_arg, flag_n);
            WeylOp op = parse_weyl_op(ops_text, n);
            rep["n"] = n;
            rep["op"] = op.str();
            if (!poly_arg.empty()) {
                RingPtr ring = PolyRing::named([&] {
                    std::vector<std::string> v;
                    for (std::size_t i = 1; i <= n; ++i) v.push_back("z" + std::to_string(i));
                    return v;
                }());
                Poly f = parse_poly(poly_arg, ring);
                rep["argument"] = f.str();
                rep["result"] = apply_poly(op, f).str();
            } else if (!power_csv.empty()) {
                TwistedPower t;
                t.exps = parse_rat_csv(power_csv);
                if (t.exps.size() != n) throw parse_error("--power needs one exponent per variable");
                auto c = Rat::parse(coeff_str);
                if (!c) throw parse_error("bad --coeff");
                t.coeff = *c;
                rep["argument"] = t.str();
                auto result = apply_twisted(op, t);
                Json arr = Json::array();
                for (const auto& r : result) arr.push_back(r.str());
                rep["result"] = std::move(arr);
            } else {
                throw parse_error("apply needs --poly or --power");
            }
        }

        emit(rep, as_json, out);
        return 0;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace weylkit
