#include "hopfforge/bundle_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace hopfforge {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// lookups

AtomPtr BundleFile::atom(const std::string& name) const {
    for (const auto& [n, a] : atoms)
        if (n == name) return a;
    throw BundleFormatError("unknown object: " + name);
}

Obj BundleFile::object(const std::string& name) const { return Obj::atom(ctx, atom(name)); }

Obj BundleFile::word(const std::vector<std::string>& names) const {
    std::vector<AtomPtr> w;
    for (const auto& n : names) w.push_back(atom(n));
    return Obj(ctx, std::move(w));
}

const Mor& BundleFile::morphism(const std::string& name) const {
    for (const auto& [n, m] : morphisms)
        if (n == name) return m;
    throw BundleFormatError("unknown morphism: " + name);
}

HopfBundle BundleFile::bundle(const std::string& sname) const {
    for (const auto& [n, s] : structures) {
        if (n != sname) continue;
        HopfBundle h;
        h.obj = object(s.object);
        auto grab = [&](const std::optional<std::string>& r) -> std::optional<Mor> {
            if (!r) return std::nullopt;
            return morphism(*r);
        };
        h.mul = grab(s.mul);
        h.unit = grab(s.unit);
        h.comul = grab(s.comul);
        h.counit = grab(s.counit);
        h.antipode = grab(s.antipode);
        return h;
    }
    throw BundleFormatError("unknown structure: " + sname);
}

CrossDatum BundleFile::cross_datum() const {
    if (!cross) throw BundleFormatError("bundle has no cross section");
    if (!cross->psi || !cross->phi) throw BundleFormatError("cross section lacks psi or phi");
    return {bundle(cross->A), bundle(cross->B), morphism(*cross->psi), morphism(*cross->phi)};
}

ProjectionDatum BundleFile::projection_datum() const {
    if (!projection) throw BundleFormatError("bundle has no projection section");
    ProjectionDirection dir;
    if (projection->direction == "equalizer")
        dir = ProjectionDirection::Equalizer;
    else if (projection->direction == "coequalizer")
        dir = ProjectionDirection::Coequalizer;
    else
        throw BundleFormatError("projection direction must be equalizer or coequalizer");
    return {bundle(projection->H), bundle(projection->B), morphism(projection->i), morphism(projection->pi),
            dir};
}

// ---------------------------------------------------------------------------
// parsing

namespace {

Deg parse_deg(const json& j, std::size_t rank) {
    if (!j.is_array() || j.size() != rank) throw BundleFormatError("degree tuple has wrong rank");
    Deg d;
    for (const auto& v : j) d.push_back(v.get<std::uint32_t>());
    return d;
}

FieldSpec parse_field(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldSpec::rational();
    if (kind == "prime") return FieldSpec::prime(j.at("p").get<std::uint64_t>());
    throw BundleFormatError("field kind must be rational or prime");
}

json field_json(const FieldSpec& fs) {
    if (fs.is_rational()) return json{{"kind", "rational"}};
    return json{{"kind", "prime"}, {"p", fs.p}};
}

}  // namespace

BundleFile parse_bundle(const json& j) {
    BundleFile b;
    try {
        FieldSpec fs = parse_field(j.at("field"));
        GradingGroup grp;
        std::vector<std::vector<Scalar>> chi;
        if (j.contains("grading")) {
            const json& g = j.at("grading");
            for (const auto& o : g.at("orders")) grp.orders.push_back(o.get<std::uint32_t>());
            const json& table = g.at("bicharacter");
            if (table.size() != grp.rank()) throw BundleFormatError("bicharacter table rank mismatch");
            for (const auto& row : table) {
                std::vector<Scalar> r;
                if (row.size() != grp.rank()) throw BundleFormatError("bicharacter table rank mismatch");
                for (const auto& v : row) r.push_back(Scalar::parse(fs, v.get<std::string>()));
                chi.push_back(std::move(r));
            }
        }
        b.ctx = std::make_shared<GradingCtx>(fs, grp, chi);

        for (const auto& [name, decl] : j.at("objects").items()) {
            std::map<Deg, std::size_t> dims;
            for (const auto& block : decl.at("dims")) {
                Deg d = parse_deg(block.at("degree"), grp.rank());
                if (!grp.valid(d)) throw BundleFormatError("degree out of range in object " + name);
                dims[d] += block.at("dim").get<std::size_t>();
            }
            b.atoms.emplace_back(name, make_atom(name, dims));
        }

        if (j.contains("morphisms"))
            for (const auto& [name, decl] : j.at("morphisms").items()) {
                Obj dom = b.word(decl.at("dom").get<std::vector<std::string>>());
                Obj cod = b.word(decl.at("cod").get<std::vector<std::string>>());
                std::vector<std::tuple<std::size_t, std::size_t, Scalar>> ts;
                for (const auto& e : decl.at("entries")) {
                    std::size_t r = e.at(0).get<std::size_t>(), c = e.at(1).get<std::size_t>();
                    if (r >= cod.dim() || c >= dom.dim())
                        throw BundleFormatError("entry out of range in morphism " + name);
                    ts.emplace_back(r, c, Scalar::parse(fs, e.at(2).get<std::string>()));
                }
                b.morphisms.emplace_back(name, Mor::from_triplets(dom, cod, ts));
            }

        if (j.contains("structures"))
            for (const auto& [name, decl] : j.at("structures").items()) {
                BundleFile::StructureDecl s;
                s.object = decl.at("object").get<std::string>();
                auto grab = [&](const char* key) -> std::optional<std::string> {
                    if (!decl.contains(key) || decl.at(key).is_null()) return std::nullopt;
                    return decl.at(key).get<std::string>();
                };
                s.mul = grab("mul");
                s.unit = grab("unit");
                s.comul = grab("comul");
                s.counit = grab("counit");
                s.antipode = grab("antipode");
                if (decl.contains("flags"))
                    for (const auto& f : decl.at("flags")) s.flags.push_back(f.get<std::string>());
                b.structures.emplace_back(name, s);
            }

        if (j.contains("cross")) {
            const json& c = j.at("cross");
            BundleFile::CrossDecl cd;
            cd.A = c.at("A").get<std::string>();
            cd.B = c.at("B").get<std::string>();
            if (c.contains("psi") && !c.at("psi").is_null()) cd.psi = c.at("psi").get<std::string>();
            if (c.contains("phi") && !c.at("phi").is_null()) cd.phi = c.at("phi").get<std::string>();
            b.cross = cd;
        }
        if (j.contains("actions")) {
            const json& a = j.at("actions");
            BundleFile::ActionsDecl ad;
            auto grab = [&](const char* key) -> std::optional<std::string> {
                if (!a.contains(key) || a.at(key).is_null()) return std::nullopt;
                return a.at(key).get<std::string>();
            };
            ad.lact = grab("lact");
            ad.ract = grab("ract");
            ad.lcoact = grab("lcoact");
            ad.rcoact = grab("rcoact");
            b.actions = ad;
        }
        if (j.contains("projection")) {
            const json& p = j.at("projection");
            b.projection = BundleFile::ProjectionDecl{
                p.at("H").get<std::string>(), p.at("B").get<std::string>(), p.at("i").get<std::string>(),
                p.at("pi").get<std::string>(), p.at("direction").get<std::string>()};
        }
    } catch (const json::exception& e) {
        throw BundleFormatError(std::string("bundle schema: ") + e.what());
    } catch (const ShapeMismatch& e) {
        throw BundleFormatError(e.what());
    } catch (const std::invalid_argument& e) {
        throw BundleFormatError(e.what());
    }
    // every referenced name must resolve
    auto check_ref = [&](const std::optional<std::string>& m) {
        if (m) b.morphism(*m);
    };
    for (const auto& [n, s] : b.structures) {
        b.object(s.object);
        check_ref(s.mul);
        check_ref(s.unit);
        check_ref(s.comul);
        check_ref(s.counit);
        check_ref(s.antipode);
    }
    if (b.cross) {
        b.bundle(b.cross->A);
        b.bundle(b.cross->B);
        check_ref(b.cross->psi);
        check_ref(b.cross->phi);
    }
    if (b.actions) {
        check_ref(b.actions->lact);
        check_ref(b.actions->ract);
        check_ref(b.actions->lcoact);
        check_ref(b.actions->rcoact);
    }
    if (b.projection) {
        b.bundle(b.projection->H);
        b.bundle(b.projection->B);
        b.morphism(b.projection->i);
        b.morphism(b.projection->pi);
    }
    return b;
}

BundleFile load_bundle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BundleFormatError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw BundleFormatError(std::string("bad JSON: ") + e.what());
    }
    return parse_bundle(j);
}

// ---------------------------------------------------------------------------
// serialization (deterministic: insertion order, sorted sparse triplets)

namespace {

std::vector<std::string> word_names(const BundleFile& b, const Obj& o) {
    std::vector<std::string> names;
    for (const auto& a : o.word()) {
        bool found = false;
        for (const auto& [n, ap] : b.atoms)
            if (ap == a) {
                names.push_back(n);
                found = true;
                break;
            }
        if (!found) throw BundleFormatError("morphism references an unregistered object");
    }
    return names;
}

}  // namespace

json bundle_json(const BundleFile& b) {
    ordered j;
    j["format"] = "hopfforge-bundle";
    j["version"] = 1;
    j["field"] = field_json(b.ctx->field());
    ordered grading;
    grading["orders"] = b.ctx->group().orders;
    ordered chi = ordered::array();
    for (const auto& row : b.ctx->chi_table()) {
        ordered r = ordered::array();
        for (const auto& v : row) r.push_back(v.str());
        chi.push_back(r);
    }
    grading["bicharacter"] = chi;
    j["grading"] = grading;

    ordered objs;
    for (const auto& [name, a] : b.atoms) {
        std::map<Deg, std::size_t> dims;
        for (const auto& d : a->degs) ++dims[d];
        ordered blocks = ordered::array();
        for (const auto& [d, n] : dims) blocks.push_back(ordered{{"degree", d}, {"dim", n}});
        objs[name] = ordered{{"dims", blocks}};
    }
    j["objects"] = objs;

    ordered mors;
    for (const auto& [name, m] : b.morphisms) {
        ordered entries = ordered::array();
        for (std::size_t c = 0; c < m.mat().cols(); ++c)
            for (std::size_t r = 0; r < m.mat().rows(); ++r) {
                Scalar v = m.entry(r, c);
                if (!v.is_zero()) entries.push_back(ordered{r, c, v.str()});
            }
        mors[name] = ordered{
            {"dom", word_names(b, m.dom())}, {"cod", word_names(b, m.cod())}, {"entries", entries}};
    }
    j["morphisms"] = mors;

    if (!b.structures.empty()) {
        ordered st;
        for (const auto& [name, s] : b.structures) {
            ordered d;
            d["object"] = s.object;
            auto put = [&](const char* key, const std::optional<std::string>& v) {
                if (v) d[key] = *v;
            };
            put("mul", s.mul);
            put("unit", s.unit);
            put("comul", s.comul);
            put("counit", s.counit);
            put("antipode", s.antipode);
            d["flags"] = s.flags;
            st[name] = d;
        }
        j["structures"] = st;
    }
    if (b.cross) {
        ordered c;
        c["A"] = b.cross->A;
        c["B"] = b.cross->B;
        if (b.cross->psi) c["psi"] = *b.cross->psi;
        if (b.cross->phi) c["phi"] = *b.cross->phi;
        j["cross"] = c;
    }
    if (b.actions) {
        ordered a;
        auto put = [&](const char* key, const std::optional<std::string>& v) {
            if (v) a[key] = *v;
        };
        put("lact", b.actions->lact);
        put("ract", b.actions->ract);
        put("lcoact", b.actions->lcoact);
        put("rcoact", b.actions->rcoact);
        j["actions"] = a;
    }
    if (b.projection)
        j["projection"] = ordered{{"H", b.projection->H},
                                  {"B", b.projection->B},
                                  {"i", b.projection->i},
                                  {"pi", b.projection->pi},
                                  {"direction", b.projection->direction}};
    return j;
}

void save_bundle(const BundleFile& b, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw BundleFormatError("cannot write " + path);
    out << bundle_json(b).dump(1) << "\n";
}

// ---------------------------------------------------------------------------
// validation

CheckReport validate_bundle(const BundleFile& b) {
    CheckReport rep;
    for (const auto& [name, s] : b.structures) {
        HopfBundle h = b.bundle(name);
        const Obj& X = h.obj;
        // role arities
        auto arity = [&](const std::optional<Mor>& m, const Obj& dom, const Obj& cod, const char* role) {
            if (!m) return;
            if (!m->dom().graded_equal(dom) || !m->cod().graded_equal(cod))
                throw BundleFormatError(std::string("role ") + role + " of " + name + " has wrong shape");
        };
        arity(h.mul, X.tensor(X), X, "mul");
        arity(h.unit, Obj::unit(b.ctx), X, "unit");
        arity(h.comul, X, X.tensor(X), "comul");
        arity(h.counit, X, Obj::unit(b.ctx), "counit");
        arity(h.antipode, X, X, "antipode");
        for (const auto& f : s.flags) {
            if (f == "algebra") {
                rep.merge_prefixed(check_algebra(h.algebra()), name + ".");
            } else if (f == "coalgebra") {
                rep.merge_prefixed(check_coalgebra(h.coalgebra()), name + ".");
            } else if (f == "bialgebra") {
                rep.merge_prefixed(check_bialgebra(h), name + ".");
            } else if (f == "hopf") {
                if (!h.antipode) {
                    rep.add_bool(name + ".braidedantipode", false);
                } else {
                    CheckReport r = check_antipode_axioms(h, *h.antipode);
                    rep.add_bool(name + ".braidedantipode", r.pass());
                }
            } else {
                throw BundleFormatError("unknown structure flag: " + f);
            }
        }
    }
    if (b.cross && b.cross->psi && b.cross->phi) {
        CrossDatum d = b.cross_datum();
        validate_cross_shapes(d);
    }
    if (b.projection) {
        ProjectionDatum pd = b.projection_datum();
        (void)pd;
    }
    return rep;
}

nlohmann::json report_json(const CheckReport& rep) {
    ordered j;
    j["pass"] = rep.pass();
    ordered entries = ordered::array();
    for (const auto& e : rep.entries) {
        ordered o;
        o["label"] = e.label;
        o["pass"] = e.pass;
        if (e.witness) {
            o["witness"] = ordered{{"row", e.witness->row},
                                   {"col", e.witness->col},
                                   {"lhs", e.witness->lhs.str()},
                                   {"rhs", e.witness->rhs.str()}};
        }
        entries.push_back(o);
    }
    j["entries"] = entries;
    return j;
}

nlohmann::json classification_json(const Classification& c) {
    ordered j;
    j["smash_left"] = c.smash_left;
    j["smash_right"] = c.smash_right;
    j["cosmash_left"] = c.cosmash_left;
    j["cosmash_right"] = c.cosmash_right;
    j["biproduct_left"] = c.biproduct_left;
    j["biproduct_right"] = c.biproduct_right;
    j["double_cross_coproduct"] = c.double_cross_coproduct;
    j["double_cross_product"] = c.double_cross_product;
    j["plain"] = c.plain;
    return j;
}

// ---------------------------------------------------------------------------
// writer

BundleWriter::BundleWriter(Ctx ctx) { file_.ctx = std::move(ctx); }

void BundleWriter::add_atom(const std::string& name, const AtomPtr& a) {
    for (const auto& [n, ap] : file_.atoms) {
        if (n == name && ap != a) throw BundleFormatError("object name reused: " + name);
        if (ap == a) return;
    }
    file_.atoms.emplace_back(name, a);
}

std::string BundleWriter::atom_name(const AtomPtr& a) const {
    for (const auto& [n, ap] : file_.atoms)
        if (ap == a) return n;
    throw BundleFormatError("atom not registered with the writer");
}

void BundleWriter::add_morphism(const std::string& name, const Mor& m) {
    for (const auto& a : m.dom().word()) atom_name(a);
    for (const auto& a : m.cod().word()) atom_name(a);
    for (auto& [n, old] : file_.morphisms)
        if (n == name) {
            old = m;
            return;
        }
    file_.morphisms.emplace_back(name, m);
}

void BundleWriter::add_structure(const std::string& name, const HopfBundle& h) {
    if (h.obj.word().size() != 1)
        throw BundleFormatError("structures must be carried by a single named object");
    add_atom(name, h.obj.word()[0]);
    BundleFile::StructureDecl s;
    s.object = name;
    auto put = [&](const char* suffix, const std::optional<Mor>& m, std::optional<std::string>& slot) {
        if (!m) return;
        std::string mn = name + "." + suffix;
        add_morphism(mn, *m);
        slot = mn;
    };
    put("mul", h.mul, s.mul);
    put("unit", h.unit, s.unit);
    put("comul", h.comul, s.comul);
    put("counit", h.counit, s.counit);
    put("antipode", h.antipode, s.antipode);
    if (h.algebra_verified) s.flags.push_back("algebra");
    if (h.coalgebra_verified) s.flags.push_back("coalgebra");
    if (h.bialgebra_verified) s.flags.push_back("bialgebra");
    if (h.hopf_verified) s.flags.push_back("hopf");
    for (auto& [n, old] : file_.structures)
        if (n == name) {
            old = s;
            return;
        }
    file_.structures.emplace_back(name, s);
}

void BundleWriter::set_cross(const std::string& A, const std::string& B, const Mor& psi, const Mor& phi) {
    add_morphism("psi", psi);
    add_morphism("phi", phi);
    file_.cross = BundleFile::CrossDecl{A, B, "psi", "phi"};
}

void BundleWriter::set_actions(const ActionCoactionDatum& acts) {
    add_morphism("lact", acts.lact);
    add_morphism("ract", acts.ract);
    add_morphism("lcoact", acts.lcoact);
    add_morphism("rcoact", acts.rcoact);
    file_.actions = BundleFile::ActionsDecl{"lact", "ract", "lcoact", "rcoact"};
}

void BundleWriter::set_projection(const std::string& H, const std::string& B, const Mor& i, const Mor& pi,
                                  ProjectionDirection dir) {
    add_morphism("i", i);
    add_morphism("pi", pi);
    file_.projection = BundleFile::ProjectionDecl{
        H, B, "i", "pi", dir == ProjectionDirection::Equalizer ? "equalizer" : "coequalizer"};
}

}  // namespace hopfforge
