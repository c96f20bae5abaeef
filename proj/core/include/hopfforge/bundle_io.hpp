#pragma once

#include <nlohmann/json_fwd.hpp>

#include "hopfforge/constructors.hpp"
#include "hopfforge/projection.hpp"

namespace hopfforge {

/// schema violations and unresolvable references (CLI exit code 2)
struct BundleFormatError : std::runtime_error {
    explicit BundleFormatError(const std::string& what) : std::runtime_error(what) {}
};

/// In-memory form of a structure bundle file: named graded objects, named
/// degree-preserving morphisms (dom/cod are object-name tensor lists), role
/// bindings for structures, and optional cross/projection task sections.
struct BundleFile {
    Ctx ctx;
    std::vector<std::pair<std::string, AtomPtr>> atoms;  // insertion order kept for serialization
    std::vector<std::pair<std::string, Mor>> morphisms;

    struct StructureDecl {
        std::string object;
        std::optional<std::string> mul, unit, comul, counit, antipode;
        std::vector<std::string> flags;  // algebra | coalgebra | bialgebra | hopf
    };
    std::vector<std::pair<std::string, StructureDecl>> structures;

    struct CrossDecl {
        std::string A, B;
        std::optional<std::string> psi, phi;
    };
    std::optional<CrossDecl> cross;

    struct ActionsDecl {
        std::optional<std::string> lact, ract, lcoact, rcoact;
    };
    std::optional<ActionsDecl> actions;

    struct ProjectionDecl {
        std::string H, B, i, pi;
        std::string direction;  // "equalizer" | "coequalizer"
    };
    std::optional<ProjectionDecl> projection;

    AtomPtr atom(const std::string& name) const;
    Obj object(const std::string& name) const;
    Obj word(const std::vector<std::string>& names) const;
    const Mor& morphism(const std::string& name) const;
    HopfBundle bundle(const std::string& structure_name) const;
    CrossDatum cross_datum() const;
    ProjectionDatum projection_datum() const;
};

BundleFile parse_bundle(const nlohmann::json& j);
BundleFile load_bundle(const std::string& path);
nlohmann::json bundle_json(const BundleFile& b);
void save_bundle(const BundleFile& b, const std::string& path);

/// structural validation of all declared flags; throws BundleFormatError on
/// schema-level problems, returns per-flag verdicts otherwise
CheckReport validate_bundle(const BundleFile& b);

nlohmann::json report_json(const CheckReport& rep);
nlohmann::json classification_json(const Classification& c);

// writer helpers for builders

class BundleWriter {
  public:
    explicit BundleWriter(Ctx ctx);

    void add_atom(const std::string& name, const AtomPtr& a);
    /// registers the morphism; every atom in its dom/cod word must be added
    void add_morphism(const std::string& name, const Mor& m);
    /// declares the structure and registers its maps as <name>.mul etc.
    void add_structure(const std::string& name, const HopfBundle& h);
    void set_cross(const std::string& A, const std::string& B, const Mor& psi, const Mor& phi);
    void set_actions(const ActionCoactionDatum& acts);
    void set_projection(const std::string& H, const std::string& B, const Mor& i, const Mor& pi,
                        ProjectionDirection dir);

    const BundleFile& file() const { return file_; }
    BundleFile& file_mut() { return file_; }

  private:
    std::string atom_name(const AtomPtr& a) const;
    BundleFile file_;
};

}  // namespace hopfforge
