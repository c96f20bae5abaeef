#include "cli_app.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hopfforge/bundle_io.hpp"

namespace hopfforge::cli {

using nlohmann::json;

namespace {

FieldSpec parse_field_flag(const std::string& s) {
    if (s == "rational") return FieldSpec::rational();
    if (s.rfind("fp:", 0) == 0) return FieldSpec::prime(std::stoull(s.substr(3)));
    throw BundleFormatError("--field must be rational or fp:<p>");
}

GroupDatum parse_group_flag(const std::string& s) {
    if (s.rfind("z:", 0) == 0) return GroupDatum::cyclic(std::stoull(s.substr(2)));
    if (s.rfind("s:", 0) == 0) return GroupDatum::symmetric(std::stoull(s.substr(2)));
    throw BundleFormatError("--group must be z:<n> or s:<n>");
}

void emit(const json& j, const std::string& json_out) {
    if (json_out.empty()) {
        std::cout << j.dump(1) << "\n";
    } else {
        std::ofstream out(json_out);
        if (!out) throw BundleFormatError("cannot write " + json_out);
        out << j.dump(1) << "\n";
    }
}

void print_report(const CheckReport& rep) {
    for (const auto& e : rep.entries) {
        std::cout << (e.pass ? "pass  " : "FAIL  ") << e.label;
        if (e.witness)
            std::cout << "   first discrepancy at (" << e.witness->row << "," << e.witness->col
                      << "): " << e.witness->lhs.str() << " != " << e.witness->rhs.str();
        std::cout << "\n";
    }
}

int cmd_validate(const std::string& path, const std::string& json_out) {
    BundleFile b = load_bundle(path);
    CheckReport rep = validate_bundle(b);
    if (!json_out.empty()) emit(report_json(rep), json_out);
    print_report(rep);
    if (!rep.pass()) {
        std::cerr << "validation failed: " << rep.first_failing() << "\n";
        return 1;
    }
    std::cout << "bundle valid\n";
    return 0;
}

int cmd_check(const std::string& path, const std::string& set, const std::string& json_out) {
    BundleFile b = load_bundle(path);
    CrossDatum d = b.cross_datum();
    CheckReport rep;
    if (set == "direct")
        rep = check_bat_direct(d);
    else if (set == "neccconds")
        rep = check_neccconds(d);
    else if (set == "bespdrab")
        rep = check_bespdrab(d);
    else if (set == "twoanothYD")
        rep = check_twoanothYD(d);
    else if (set == "aux") {
        rep = check_aux_lists(d, "crossprodalg2");
        rep.merge(check_aux_lists(d, "crossprodcoalg2"));
    } else
        rep = check_condition_set(d, condition_set_from_name(set));
    emit(report_json(rep), json_out);
    print_report(rep);
    return rep.pass() ? 0 : 1;
}

int cmd_classify(const std::string& path, const std::string& json_out) {
    BundleFile b = load_bundle(path);
    Classification c = classify(b.cross_datum());
    emit(classification_json(c), json_out);
    return 0;
}

int cmd_reconstruct(const std::string& path, const std::string& out_path, const std::string& json_out) {
    BundleFile b = load_bundle(path);
    ProjectionDatum pd = b.projection_datum();
    Reconstruction rec = pd.direction == ProjectionDirection::Equalizer ? reconstruct_equalizer(pd)
                                                                        : reconstruct_coequalizer(pd);
    json meta;
    meta["dims"] = {{"A", rec.A.dim()}, {"B", pd.B.obj.dim()}, {"H", pd.H.obj.dim()}};
    meta["report"] = report_json(rec.report);
    if (!out_path.empty()) {
        BundleWriter w(b.ctx);
        HopfBundle Ab = rec.A_bundle;
        verify(Ab);
        w.add_structure("A", Ab);
        w.add_structure("B", pd.B);
        w.set_cross("A", "B", rec.datum.psi, rec.datum.phi);
        if (pd.H.obj.word().size() == 1) {
            w.add_atom("H", pd.H.obj.word()[0]);
            w.add_morphism("zeta", rec.zeta);
            w.add_morphism("zeta_inv", rec.zeta_inv);
        }
        save_bundle(w.file(), out_path);
    }
    emit(meta, json_out);
    print_report(rec.report);
    if (!rec.report.pass()) {
        std::cerr << "reconstruction check failed: " << rec.report.first_failing() << "\n";
        return 1;
    }
    return 0;
}

int cmd_report(const std::string& path, const std::string& json_out) {
    BundleFile b = load_bundle(path);
    json j;
    CheckReport validation = validate_bundle(b);
    j["validation"] = report_json(validation);
    bool pass = validation.pass();
    if (b.cross && b.cross->psi && b.cross->phi) {
        CrossDatum d = b.cross_datum();
        CheckReport alg = check_cross_product_algebra(d);
        CheckReport coalg = check_cross_product_coalgebra(d);
        j["crossprodalg"] = report_json(alg);
        j["crossprodcoalg"] = report_json(coalg);
        pass = pass && alg.pass() && coalg.pass();
        if (alg.pass() && coalg.pass()) {
            CheckReport direct = check_bat_direct(d);
            j["direct"] = report_json(direct);
            pass = pass && direct.pass();
            if (direct.pass()) j["classification"] = classification_json(classify(d));
        }
    }
    if (b.projection) {
        CheckReport pc = check_projection_conditions(b.projection_datum());
        j["projection_conditions"] = report_json(pc);
        pass = pass && pc.pass();
    }
    emit(j, json_out);
    return pass ? 0 : 1;
}

MatchedGroupPair parse_matched_pair(const json& j) {
    auto tbl = [&](const json& t) {
        std::vector<std::vector<std::size_t>> v;
        for (const auto& row : t) v.push_back(row.get<std::vector<std::size_t>>());
        return v;
    };
    MatchedGroupPair mp;
    mp.g1 = GroupDatum::from_table(tbl(j.at("g1").at("table")));
    mp.g2 = GroupDatum::from_table(tbl(j.at("g2").at("table")));
    mp.act21 = tbl(j.at("act21"));
    mp.act12 = tbl(j.at("act12"));
    return mp;
}

int cmd_build(const std::string& kind, const std::string& in_path, const std::string& out_path,
              const std::string& field_flag, const std::string& group_flag) {
    Ctx ctx;
    auto need_ctx = [&]() {
        if (!ctx) ctx = GradingCtx::trivial(parse_field_flag(field_flag));
        return ctx;
    };
    BundleWriter* writer = nullptr;
    BundleWriter w{nullptr};

    auto write_cross = [&](const BuiltCross& bc, const char* an, const char* bn) {
        w = BundleWriter(bc.datum.A.obj.ctx());
        writer = &w;
        HopfBundle A = bc.datum.A, B = bc.datum.B;
        verify(A);
        verify(B);
        w.add_structure(an, A);
        w.add_structure(bn, B);
        w.set_cross(an, bn, bc.datum.psi, bc.datum.phi);
        w.set_actions(derived_actions_raw(bc.datum));
    };

    if (kind == "group" || kind == "dual-group") {
        GroupDatum g = parse_group_flag(group_flag);
        HopfBundle h = kind == "group" ? group_algebra(need_ctx(), g) : function_algebra(need_ctx(), g);
        w = BundleWriter(need_ctx());
        writer = &w;
        w.add_structure(kind == "group" ? "kG" : "k^G", h);
    } else if (kind == "drinfeld-double") {
        GroupDatum g = parse_group_flag(group_flag);
        write_cross(drinfeld_double(need_ctx(), g), "A", "B");
    } else if (kind == "bicrossed") {
        std::ifstream in(in_path);
        if (!in) throw BundleFormatError("cannot open " + in_path);
        json j;
        in >> j;
        MatchedGroupPair mp = parse_matched_pair(j.contains("matched_pair") ? j.at("matched_pair") : j);
        auto [group, hopf] = build_bicrossed_group(need_ctx(), mp);
        w = BundleWriter(need_ctx());
        writer = &w;
        w.add_structure("kG", hopf);
    } else if (kind == "smash" || kind == "cosmash" || kind == "biproduct" || kind == "dcp" ||
               kind == "dccp") {
        BundleFile in = load_bundle(in_path);
        HopfBundle A = in.bundle("A"), B = in.bundle("B");
        verify(A);
        verify(B);
        if (!in.actions) throw BundleFormatError("builder input needs an actions section");
        auto need = [&](const std::optional<std::string>& m, const char* what) -> const Mor& {
            if (!m) throw BundleFormatError(std::string("builder input needs actions.") + what);
            return in.morphism(*m);
        };
        if (kind == "smash") {
            Mor psi = build_smash_product(B, A.algebra(), need(in.actions->lact, "lact"));
            w = BundleWriter(in.ctx);
            writer = &w;
            w.add_structure("A", A);
            w.add_structure("B", B);
            w.add_morphism("psi", psi);
            w.file_mut().cross = BundleFile::CrossDecl{"A", "B", "psi", std::nullopt};
        } else if (kind == "cosmash") {
            Mor phi = build_smash_coproduct(B, A.coalgebra(), need(in.actions->lcoact, "lcoact"));
            w = BundleWriter(in.ctx);
            writer = &w;
            w.add_structure("A", A);
            w.add_structure("B", B);
            w.add_morphism("phi", phi);
            w.file_mut().cross = BundleFile::CrossDecl{"A", "B", std::nullopt, "phi"};
        } else if (kind == "biproduct") {
            write_cross(build_biproduct(B, A, need(in.actions->lact, "lact"), need(in.actions->lcoact, "lcoact")),
                        "A", "B");
        } else if (kind == "dcp") {
            write_cross(build_double_cross_product(A, B, need(in.actions->lact, "lact"),
                                                   need(in.actions->ract, "ract")),
                        "A", "B");
        } else {
            write_cross(build_double_cross_coproduct(A, B, need(in.actions->lcoact, "lcoact"),
                                                     need(in.actions->rcoact, "rcoact")),
                        "A", "B");
        }
    } else {
        throw BundleFormatError("unknown build kind: " + kind);
    }

    if (!writer) throw BundleFormatError("nothing built");
    save_bundle(writer->file(), out_path);
    // the output must re-validate cleanly
    BundleFile back = load_bundle(out_path);
    CheckReport rep = validate_bundle(back);
    if (!rep.pass()) {
        std::cerr << "built bundle fails validation: " << rep.first_failing() << "\n";
        return 1;
    }
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"hopfforge: cross product bialgebras in graded vector spaces"};
    app.require_subcommand(1);

    std::string path, out_path, json_out, set = "direct", kind, field_flag = "rational", group_flag;

    auto* validate = app.add_subcommand("validate", "parse a bundle and verify declared structures");
    validate->add_option("path", path)->required();
    validate->add_option("--json", json_out);

    auto* check = app.add_subcommand("check", "run an equation suite on the bundle's cross datum");
    check->add_option("path", path)->required();
    check->add_option("--set", set)
        ->check(CLI::IsMember({"direct", "ii", "iii", "iv", "v", "vi", "vii", "neccconds", "bespdrab",
                               "twoanothYD", "aux"}));
    check->add_option("--json", json_out);

    auto* build = app.add_subcommand("build", "run a named constructor and write the resulting bundle");
    build->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember(
            {"smash", "cosmash", "biproduct", "dcp", "dccp", "group", "dual-group", "drinfeld-double",
             "bicrossed"}));
    build->add_option("--in", path);
    build->add_option("--out", out_path)->required();
    build->add_option("--field", field_flag);
    build->add_option("--group", group_flag);

    auto* classify_cmd = app.add_subcommand("classify", "normality flags of the bundle's cross datum");
    classify_cmd->add_option("path", path)->required();
    classify_cmd->add_option("--json", json_out);

    auto* reconstruct = app.add_subcommand("reconstruct", "rebuild a cross product from a projection datum");
    reconstruct->add_option("path", path)->required();
    reconstruct->add_option("--out", out_path);
    reconstruct->add_option("--json", json_out);

    auto* report = app.add_subcommand("report", "run every applicable check and emit one JSON report");
    report->add_option("path", path)->required();
    report->add_option("--json", json_out);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(path, json_out);
        if (check->parsed()) return cmd_check(path, set, json_out);
        if (build->parsed()) return cmd_build(kind, path, out_path, field_flag, group_flag);
        if (classify_cmd->parsed()) return cmd_classify(path, json_out);
        if (reconstruct->parsed()) return cmd_reconstruct(path, out_path, json_out);
        if (report->parsed()) return cmd_report(path, json_out);
    } catch (const BundleFormatError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 2;
    } catch (const ShapeMismatch& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionFailed& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const CheckFailed& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace hopfforge::cli
