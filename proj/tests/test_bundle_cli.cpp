#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "cli_app.hpp"
#include "hopfforge/bundle_io.hpp"
#include "test_util.hpp"

using namespace hopfforge;
using nlohmann::json;

namespace {

std::string fixtures() {
    const char* env = std::getenv("HOPFFORGE_FIXTURES");
    REQUIRE(env != nullptr);
    return env;
}

std::string tmpfile(const std::string& name) { return std::string("/tmp/hopfforge_test_") + name; }

json slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

void spit(const std::string& path, const json& j) {
    std::ofstream out(path);
    out << j.dump(1) << "\n";
}

int run(std::vector<std::string> args) { return cli::run(args); }

}  // namespace

TEST_CASE("bundle serialization round trips bit-exact") {
    for (const char* name : {"h4_sweedler.json", "dz3.json", "ds3_f101.json", "super_tensor.json",
                             "h4_projection.json"}) {
        BundleFile b = load_bundle(fixtures() + "/" + name);
        std::string tmp = tmpfile(name);
        save_bundle(b, tmp);
        BundleFile c = load_bundle(tmp);
        REQUIRE(b.morphisms.size() == c.morphisms.size());
        for (std::size_t k = 0; k < b.morphisms.size(); ++k) {
            CHECK(b.morphisms[k].first == c.morphisms[k].first);
            CHECK(b.morphisms[k].second.mat().equal(c.morphisms[k].second.mat()));
        }
        CHECK(bundle_json(b) == bundle_json(c));
    }
}

TEST_CASE("loaded fixtures carry verified structures and pass their suites") {
    BundleFile h4 = load_bundle(fixtures() + "/h4_sweedler.json");
    CHECK(validate_bundle(h4).pass());
    CrossDatum d = h4.cross_datum();
    CHECK(check_bat_direct(d).pass());

    BundleFile sup = load_bundle(fixtures() + "/super_tensor.json");
    CHECK(validate_bundle(sup).pass());
    CHECK(check_bat_direct(sup.cross_datum()).pass());
}

TEST_CASE("cli validate: exit codes 0, 1 and 2") {
    CHECK(run({"validate", fixtures() + "/h4_sweedler.json"}) == 0);
    CHECK(run({"validate", "/nonexistent/file.json"}) == 2);

    // malformed: a non-homogeneous matrix in a graded bundle
    json j = slurp(fixtures() + "/super_tensor.json");
    j["morphisms"]["psi"]["entries"].push_back({3, 0, "1"});  // odd row hit from an even column
    std::string bad = tmpfile("nonhomog.json");
    spit(bad, j);
    CHECK(run({"validate", bad}) == 2);

    // declared hopf without antipode axioms: flag failure, exit 1
    json h = slurp(fixtures() + "/h4_sweedler.json");
    h["structures"]["B"]["flags"] = {"algebra", "coalgebra", "bialgebra", "hopf"};
    h["structures"]["B"].erase("antipode");
    std::string nohopf = tmpfile("nohopf.json");
    spit(nohopf, h);
    CHECK(run({"validate", nohopf}) == 1);
}

TEST_CASE("cli check: sets pass on fixtures and fail on perturbations") {
    for (const char* set : {"direct", "ii", "iii", "iv", "v", "vi", "vii", "neccconds", "bespdrab",
                            "twoanothYD", "aux"})
        CHECK(run({"check", fixtures() + "/h4_sweedler.json", "--set", set}) == 0);
    CHECK(run({"check", fixtures() + "/dz3.json", "--set", "direct"}) == 0);
    CHECK(run({"check", fixtures() + "/ds3_f101.json", "--set", "direct"}) == 0);

    json j = slurp(fixtures() + "/h4_sweedler.json");
    // replace phi by the flip (the braiding at trivial grading)
    json entries = json::array();
    BundleFile b = load_bundle(fixtures() + "/h4_sweedler.json");
    Mor flip = braiding(b.object("A"), b.object("B"));
    for (std::size_t c = 0; c < flip.mat().cols(); ++c)
        for (std::size_t r = 0; r < flip.mat().rows(); ++r)
            if (!flip.entry(r, c).is_zero()) entries.push_back({r, c, flip.entry(r, c).str()});
    j["morphisms"]["phi"]["entries"] = entries;
    std::string pert = tmpfile("h4_braidphi.json");
    spit(pert, j);
    std::string rep = tmpfile("h4_braidphi_report.json");
    CHECK(run({"check", pert, "--set", "direct", "--json", rep}) == 1);
    json r = slurp(rep);
    CHECK(!r["pass"].get<bool>());
    bool found = false;
    for (const auto& e : r["entries"])
        if (e["label"] == "crossbialgcond.a") {
            found = true;
            CHECK(!e["pass"].get<bool>());
            CHECK(e.contains("witness"));
            break;  // the first failing label of the direct suite
        }
    CHECK(found);
}

TEST_CASE("cli build: biproduct of the Sweedler inputs equals the shipped fixture") {
    std::string out = tmpfile("h4_built.json");
    CHECK(run({"build", "biproduct", "--in", fixtures() + "/sweedler_inputs.json", "--out", out}) == 0);
    CHECK(slurp(out) == slurp(fixtures() + "/h4_sweedler.json"));
}

TEST_CASE("cli build: drinfeld double, groups, bicrossed") {
    std::string out = tmpfile("ds3.json");
    CHECK(run({"build", "drinfeld-double", "--group", "s:3", "--field", "fp:101", "--out", out}) == 0);
    CHECK(slurp(out) == slurp(fixtures() + "/ds3_f101.json"));
    CHECK(run({"check", out, "--set", "direct"}) == 0);

    std::string g = tmpfile("kz4.json");
    CHECK(run({"build", "group", "--group", "z:4", "--out", g}) == 0);
    CHECK(run({"validate", g}) == 0);
    std::string fg = tmpfile("fz4.json");
    CHECK(run({"build", "dual-group", "--group", "z:4", "--out", fg}) == 0);

    std::string bg = tmpfile("bicrossed.json");
    CHECK(run({"build", "bicrossed", "--in", fixtures() + "/matched_pair_z3_z2.json", "--out", bg}) == 0);
    BundleFile bb = load_bundle(bg);
    CHECK(bb.bundle("kG").obj.dim() == 6);
}

TEST_CASE("cli classify and reconstruct") {
    std::string cj = tmpfile("h4_classify.json");
    CHECK(run({"classify", fixtures() + "/h4_sweedler.json", "--json", cj}) == 0);
    json c = slurp(cj);
    CHECK(c["smash_left"].get<bool>());
    CHECK(c["cosmash_left"].get<bool>());
    CHECK(c["biproduct_left"].get<bool>());
    CHECK(!c["double_cross_coproduct"].get<bool>());

    std::string rj = tmpfile("h4_rec.json"), ro = tmpfile("h4_rec_bundle.json");
    CHECK(run({"reconstruct", fixtures() + "/h4_projection.json", "--out", ro, "--json", rj}) == 0);
    json r = slurp(rj);
    CHECK(r["dims"]["A"].get<int>() == 2);
    CHECK(r["dims"]["B"].get<int>() == 2);
    CHECK(r["dims"]["H"].get<int>() == 4);
    CHECK(run({"validate", ro}) == 0);
    CHECK(run({"check", ro, "--set", "direct"}) == 0);

    // break the splitting: pi := η_B ∘ ε_H
    json j = slurp(fixtures() + "/h4_projection.json");
    json entries = json::array();
    entries.push_back({0, 0, "1"});  // only 1 ↦ 1 survives
    j["morphisms"]["pi"]["entries"] = entries;
    std::string bad = tmpfile("h4_badproj.json");
    spit(bad, j);
    CHECK(run({"reconstruct", bad}) == 1);

    std::string rep = tmpfile("h4_report.json");
    CHECK(run({"report", fixtures() + "/h4_sweedler.json", "--json", rep}) == 0);
    json full = slurp(rep);
    CHECK(full["validation"]["pass"].get<bool>());
    CHECK(full["direct"]["pass"].get<bool>());
    CHECK(full["classification"]["biproduct_left"].get<bool>());
}

TEST_CASE("cli reconstruct of the D(S3) projection bundle over F101") {
    std::string rj = tmpfile("ds3_rec.json");
    CHECK(run({"reconstruct", fixtures() + "/ds3_f101_projection.json", "--json", rj}) == 0);
    json r = slurp(rj);
    CHECK(r["dims"]["A"].get<int>() == 6);
    CHECK(r["dims"]["B"].get<int>() == 6);
    CHECK(r["dims"]["H"].get<int>() == 36);
}
