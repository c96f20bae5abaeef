// regenerates the JSON structure bundles shipped in fixtures/
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "hopfforge/bundle_io.hpp"

using namespace hopfforge;

namespace {

void write_cross(const BuiltCross& bc, const std::string& an, const std::string& bn,
                 const std::string& path) {
    BundleWriter w(bc.datum.A.obj.ctx());
    HopfBundle A = bc.datum.A, B = bc.datum.B;
    verify(A);
    verify(B);
    w.add_structure(an, A);
    w.add_structure(bn, B);
    w.set_cross(an, bn, bc.datum.psi, bc.datum.phi);
    w.set_actions(derived_actions_raw(bc.datum));
    save_bundle(w.file(), path);
    std::cout << "wrote " << path << "\n";
}

// assembled bundle as a single named object, with the canonical projection
void write_projection(const BuiltCross& bc, const std::string& hname, const std::string& path,
                      ProjectionDirection dir) {
    Ctx ctx = bc.datum.A.obj.ctx();
    const Obj& Ao = bc.datum.A.obj;
    const Obj& Bo = bc.datum.B.obj;
    Obj AB = Ao.tensor(Bo);

    // atomize H = A⊗B under a single name, keeping the canonical slot order
    std::map<Deg, std::size_t> dims;
    for (std::size_t s = 0; s < AB.dim(); ++s) ++dims[AB.slot_degree(s)];
    Obj H = Obj::atom(ctx, make_atom(hname, dims));
    auto reslot = [&](const Mor& m, const Obj& dom, const Obj& cod) { return Mor(dom, cod, m.mat()); };

    HopfBundle Hb;
    Hb.obj = H;
    Hb.mul = reslot(*bc.bundle.mul, H.tensor(H), H);
    Hb.unit = reslot(*bc.bundle.unit, Obj::unit(ctx), H);
    Hb.comul = reslot(*bc.bundle.comul, H, H.tensor(H));
    Hb.counit = reslot(*bc.bundle.counit, H, Obj::unit(ctx));
    if (bc.bundle.antipode) Hb.antipode = reslot(*bc.bundle.antipode, H, H);
    verify(Hb);

    HopfBundle Bb = bc.datum.B;
    verify(Bb);
    Mor pi = reslot(Pipe(AB, {Stage{bc.datum.A.coalgebra().counit, Mor::identity(Bo)}}).eval(), H, Bo);
    Mor i = reslot(Pipe(Bo, {Stage{bc.datum.A.algebra().unit, Mor::identity(Bo)}}).eval(), Bo, H);

    BundleWriter w(ctx);
    w.add_structure(hname, Hb);
    w.add_structure("B", Bb);
    w.set_projection(hname, "B", i, pi, dir);
    save_bundle(w.file(), path);
    std::cout << "wrote " << path << "\n";
}

void write_sweedler_inputs(const Ctx& ctx, const std::string& path) {
    SweedlerData s = sweedler_data(ctx);
    BundleWriter w(ctx);
    HopfBundle A = s.A, B = s.B;
    verify(A);
    verify(B);
    w.add_structure("A", A);
    w.add_structure("B", B);
    w.add_morphism("lact", s.lact);
    w.add_morphism("lcoact", s.lcoact);
    w.file_mut().actions = BundleFile::ActionsDecl{"lact", std::nullopt, "lcoact", std::nullopt};
    save_bundle(w.file(), path);
    std::cout << "wrote " << path << "\n";
}

void write_matched_pair(const std::string& path) {
    // Z3/Z2 with Z2 acting by inversion: the exact factorization of S3
    nlohmann::ordered_json j;
    j["matched_pair"] = {
        {"g1", {{"table", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}}}},
        {"g2", {{"table", {{0, 1}, {1, 0}}}}},
        {"act21", {{0, 0}, {1, 2}, {2, 1}}},
        {"act12", {{0, 1}, {0, 1}, {0, 1}}},
    };
    std::ofstream out(path);
    out << j.dump(1) << "\n";
    std::cout << "wrote " << path << "\n";
}

void write_super_tensor(const std::string& path) {
    Ctx ctx = super_ctx(FieldSpec::rational());
    HopfBundle theta = super_line(ctx);
    HopfBundle kz2 = group_algebra(ctx, GroupDatum::cyclic(2), "kZ2");
    CrossDatum d = tensor_datum(theta, kz2);
    BuiltCross bc{d, assemble_bundle(d)};
    verify(bc.bundle);
    write_cross(bc, "A", "B", path);
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "fixtures";
    Ctx q = GradingCtx::trivial(FieldSpec::rational());
    Ctx f101 = GradingCtx::trivial(FieldSpec::prime(101));

    write_sweedler_inputs(q, dir + "/sweedler_inputs.json");
    BuiltCross h4 = sweedler_biproduct(q);
    write_cross(h4, "A", "B", dir + "/h4_sweedler.json");
    write_projection(h4, "H4", dir + "/h4_projection.json", ProjectionDirection::Equalizer);

    BuiltCross dz3 = drinfeld_double(q, GroupDatum::cyclic(3));
    write_cross(dz3, "A", "B", dir + "/dz3.json");

    BuiltCross ds3 = drinfeld_double(f101, GroupDatum::symmetric(3));
    write_cross(ds3, "A", "B", dir + "/ds3_f101.json");
    write_projection(ds3, "DS3", dir + "/ds3_f101_projection.json", ProjectionDirection::Equalizer);

    write_super_tensor(dir + "/super_tensor.json");
    write_matched_pair(dir + "/matched_pair_z3_z2.json");
    return 0;
}
