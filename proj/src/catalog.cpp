#include "hodgechase/scenario.hpp"

namespace hodgechase {

namespace {

CurveData elliptic(const std::string& label) { return CurveData::smooth(label, 1); }
CurveData cycle() { return CurveData::cycle_of_rationals(2); }

Scenario normal(std::string id, NormalizationPiece piece, HodgeType expected,
                std::string citation) {
    Scenario s;
    s.id = std::move(id);
    s.kind = NormalScenario{std::move(piece)};
    s.expected = expected;
    s.citation = std::move(citation);
    return s;
}

Scenario nonnormal(std::string id, std::vector<NormalizationPiece> pieces, CurveData d,
                   CurveData dbar, HodgeType expected, std::string citation) {
    Scenario s;
    s.id = std::move(id);
    s.kind = NonNormalScenario{std::move(pieces), std::move(d), std::move(dbar), {}};
    s.expected = expected;
    s.citation = std::move(citation);
    return s;
}

// The nine strata of normal Gorenstein I-surfaces, keyed by their elliptic
// singularity degrees, with the resolution data a general member carries.
std::vector<Scenario> strata() {
    std::vector<Scenario> out;
    out.push_back(normal(
        "stratum-n1", ResolvedPiece{profiles::minimal_elliptic_chi2(), {elliptic("E")}, {}},
        {0, 1},
        "normal I-surface with one simple elliptic singularity of degree 1; the minimal "
        "resolution is a minimal elliptic surface with chi = 2"));
    out.push_back(normal(
        "stratum-n2", ResolvedPiece{profiles::k3_blowup(), {elliptic("E")}, {}}, {0, 1},
        "normal I-surface with one simple elliptic singularity of degree 2; the minimal "
        "resolution is a blown-up K3"));
    out.push_back(normal(
        "stratum-n22",
        ResolvedPiece{profiles::rational(), {elliptic("E1"), elliptic("E2")}, {}}, {0, 2},
        "normal I-surface with two simple elliptic singularities of degree 2; rational "
        "minimal resolution"));
    out.push_back(normal(
        "stratum-n12",
        ResolvedPiece{profiles::rational(), {elliptic("E1"), elliptic("E2")}, {}}, {0, 2},
        "normal I-surface with simple elliptic singularities of degrees 1 and 2; rational "
        "minimal resolution"));
    out.push_back(normal(
        "stratum-n11r",
        ResolvedPiece{profiles::rational(), {elliptic("E1"), elliptic("E2")}, {}}, {0, 2},
        "normal I-surface with two simple elliptic singularities of degree 1 and rational "
        "minimal resolution; the expected type is read off the stratification diagram and "
        "confirmed here by the chase with the default rank rules"));
    out.push_back(normal(
        "stratum-n11e",
        ResolvedPiece{profiles::enriques_blowup(), {elliptic("E1"), elliptic("E2")}, {}},
        {0, 2},
        "normal I-surface with two simple elliptic singularities of degree 1; the minimal "
        "resolution is a blown-up Enriques surface"));
    const std::vector<RankAnnotation> inj = {RankAnnotation::all(1, RankRule::Injective)};
    out.push_back(normal(
        "stratum-n111",
        ResolvedPiece{profiles::ruled_over_elliptic(),
                      {elliptic("E1"), elliptic("E2"), elliptic("E3")}, inj},
        {0, 2},
        "normal I-surface with three simple elliptic singularities of degree 1; the "
        "resolution is ruled over an elliptic curve and its H^1 injects into the "
        "multisection classes"));
    out.push_back(normal(
        "stratum-n112",
        ResolvedPiece{profiles::ruled_over_elliptic(),
                      {elliptic("E1"), elliptic("E2"), elliptic("E3")}, inj},
        {0, 2},
        "normal I-surface with simple elliptic singularities of degrees 1, 1, 2; the "
        "resolution is ruled over an elliptic curve and its H^1 injects into the "
        "multisection classes"));
    return out;
}

// Five planes through two fixed points of the cone; moving two of them
// through the marked points, possibly tangent to a third, walks through all
// six Hodge types with normal members.
std::vector<Scenario> plane_family() {
    std::vector<Scenario> out;
    Scenario generic = normal(
        "planes-generic", SmoothPiece{profiles::general_type_pg2()}, {0, 0},
        "double cover of the quadric cone branched over five general plane sections; all "
        "singularities canonical");
    generic.h11 = 29;
    out.push_back(std::move(generic));
    out.push_back(normal(
        "planes-one-elliptic", ResolvedPiece{profiles::k3_blowup(), {elliptic("E")}, {}},
        {0, 1},
        "one plane moved through a marked point: an ordinary quadruple point of the branch, "
        "a simple elliptic singularity of degree 2 on the cover; blown-up K3 resolution"));
    out.push_back(normal(
        "planes-one-cusp", ResolvedPiece{profiles::k3_blowup(), {cycle()}, {}}, {1, 0},
        "the moving plane made tangent to a fixed one at the marked point: a degenerate "
        "quadruple point, a degree-2 cusp on the cover; blown-up K3 resolution"));
    out.push_back(normal(
        "planes-two-elliptic",
        ResolvedPiece{profiles::rational(), {elliptic("E1"), elliptic("E2")}, {}}, {0, 2},
        "both moving planes through the marked points: two ordinary quadruple points, two "
        "simple elliptic singularities; rational resolution"));
    out.push_back(normal(
        "planes-elliptic-cusp",
        ResolvedPiece{profiles::rational(), {elliptic("E"), cycle()}, {}}, {1, 1},
        "one ordinary and one degenerate quadruple point: an elliptic and a cusp "
        "singularity of degree 2; rational resolution"));
    out.push_back(normal(
        "planes-two-cusps", ResolvedPiece{profiles::rational(), {cycle(), cycle()}, {}},
        {2, 0},
        "two degenerate quadruple points: two degree-2 cusps; rational resolution"));
    return out;
}

Scenario generic_cover(long deg_d, HodgeType expected) {
    Scenario s = build_nonnormal_cover(deg_d);
    s.expected = expected;
    return s;
}

// Degeneration of the generic cover of doubled degree deg_d where B0 becomes
// tangent to D at `tangencies` points: each tangency absorbs two simple
// branch points and puts a node on the conductor cover.
Scenario cover_with_tangencies(long deg_d, long tangencies, HodgeType expected,
                               std::string citation) {
    Scenario s = build_nonnormal_cover(deg_d);
    auto& nn = std::get<NonNormalScenario>(s.kind);
    const long branch = s.cover->branch_points_used - 2 * tangencies;
    const CoverGenus normalization = riemann_hurwitz_double(
        s.cover->g_d, branch, branch == 0 ? std::optional(CoverTopology::Connected) : std::nullopt);
    nn.dbar = CurveData::irreducible_nodal("Dbar", normalization.genera[0], tangencies);
    s.id += (tangencies == 1 ? "-one-tangency" : "-two-tangencies");
    s.expected = expected;
    s.citation = std::move(citation);
    s.cover->branch_points_used = branch;
    s.cover->dbar_genus = normalization;
    return s;
}

// Degeneration of the split degree-5 cover where D itself acquires nodes
// away from B0; both copies upstairs acquire them too.
Scenario split_cover_with_nodes(long d_nodes, HodgeType expected, std::string citation) {
    Scenario s = build_nonnormal_cover(5);
    auto& nn = std::get<NonNormalScenario>(s.kind);
    const long g = 2 - d_nodes;
    nn.d = CurveData::irreducible_nodal("D", g, d_nodes);
    nn.dbar = CurveData{{{"Dbar1", g}, {"Dbar2", g}}, {}};
    for (long i = 0; i < d_nodes; ++i) {
        nn.dbar.nodes.emplace_back("Dbar1", "Dbar1");
        nn.dbar.nodes.emplace_back("Dbar2", "Dbar2");
    }
    s.id += (d_nodes == 1 ? "-one-node" : "-two-nodes");
    s.expected = expected;
    s.citation = std::move(citation);
    s.cover->dbar_genus = CoverGenus{{g, g}};
    return s;
}

// The degree-1 family: the K3 normalization itself must degenerate (through
// quadruple points of the reduced branch) before the type can pass <0,2>,
// and tangency of B0 and D moves the genus-1 conductor cover to a nodal
// rational curve.
std::vector<Scenario> cover_d1_family() {
    std::vector<Scenario> out;
    auto base = [](const char* id, const char* citation) {
        Scenario s = build_nonnormal_cover(1);
        s.id = id;
        s.citation = citation;
        return s;
    };
    auto degenerate_xbar = [](Scenario s, CurveData exc) {
        auto& nn = std::get<NonNormalScenario>(s.kind);
        nn.pieces.clear();
        nn.pieces.push_back(ResolvedPiece{profiles::rational(), {std::move(exc)}, {}});
        return s;
    };
    auto tangent_conductor = [](Scenario s) {
        auto& nn = std::get<NonNormalScenario>(s.kind);
        nn.dbar = CurveData::irreducible_nodal("Dbar", 0, 1);
        s.cover->branch_points_used = 2;
        s.cover->dbar_genus = CoverGenus{{0}};
        return s;
    };

    Scenario quad = degenerate_xbar(
        base("cover-d1-quadruple",
             "the degree-8 reduced branch acquires an ordinary quadruple point: the K3 "
             "normalization degenerates to a rational surface with one exceptional "
             "elliptic curve"),
        elliptic("E"));
    quad.expected = HodgeType{0, 2};
    out.push_back(std::move(quad));

    Scenario degen = degenerate_xbar(
        base("cover-d1-degenerate-quadruple",
             "the quadruple point of the reduced branch degenerates (two branches tangent): "
             "the exceptional curve becomes a cycle of rationals"),
        cycle());
    degen.expected = HodgeType{1, 1};
    out.push_back(std::move(degen));

    Scenario tangent = tangent_conductor(
        base("cover-d1-tangent",
             "B0 tangent to D at one point: the genus-1 conductor cover becomes a nodal "
             "rational curve while the K3 normalization stays general"));
    tangent.expected = HodgeType{1, 0};
    out.push_back(std::move(tangent));

    Scenario quad_tangent = tangent_conductor(degenerate_xbar(
        base("cover-d1-quadruple-tangent",
             "ordinary quadruple point on the reduced branch and B0 tangent to D: "
             "degenerate normalization and nodal conductor cover together"),
        elliptic("E")));
    quad_tangent.expected = HodgeType{1, 1};
    out.push_back(std::move(quad_tangent));

    Scenario degen_tangent = tangent_conductor(degenerate_xbar(
        base("cover-d1-degenerate-quadruple-tangent",
             "degenerate quadruple point on the reduced branch and B0 tangent to D"),
        cycle()));
    degen_tangent.expected = HodgeType{2, 0};
    out.push_back(std::move(degen_tangent));
    return out;
}

std::vector<Scenario> cover_family() {
    std::vector<Scenario> out;
    out.push_back(generic_cover(2, {0, 2}));
    out.push_back(generic_cover(4, {0, 2}));
    out.push_back(generic_cover(1, {0, 1}));
    out.push_back(generic_cover(3, {0, 2}));
    out.push_back(generic_cover(5, {0, 2}));

    out.push_back(cover_with_tangencies(
        2, 1, {1, 1},
        "B0 tangent to D at one point: one node on the genus-2 conductor cover"));
    out.push_back(cover_with_tangencies(
        2, 2, {2, 0},
        "B0 tangent to D at two points: the conductor cover is rational with two nodes"));
    out.push_back(cover_with_tangencies(
        4, 1, {1, 1},
        "B0 tangent to the elliptic curve D at one point: one node on the genus-3 "
        "conductor cover"));
    out.push_back(cover_with_tangencies(
        4, 2, {2, 0},
        "B0 tangent to the elliptic curve D at two points: the branch-free conductor "
        "cover stays connected, so the weight-one part of D cancels against its pullback "
        "and only weight zero survives"));
    out.push_back(cover_with_tangencies(
        3, 1, {1, 1},
        "B0 tangent to D at one point: one node on the genus-2 conductor cover"));
    out.push_back(cover_with_tangencies(
        3, 2, {2, 0},
        "B0 tangent to D at two points: the conductor cover is rational with two nodes"));
    out.push_back(split_cover_with_nodes(
        1, {1, 1}, "the genus-2 curve D acquires one node away from B0"));
    out.push_back(split_cover_with_nodes(
        2, {2, 0}, "the genus-2 curve D acquires two nodes away from B0"));

    auto d1 = cover_d1_family();
    out.insert(out.end(), std::make_move_iterator(d1.begin()), std::make_move_iterator(d1.end()));

    out.push_back(normal(
        "cover-split-generic", SmoothPiece{profiles::general_type_pg2()}, {0, 0},
        "reduced branch B0 + D1 + D2 with D1, D2 linearly equivalent, distinct and "
        "general: negligible singularities only"));
    out.push_back(normal(
        "cover-split-33point",
        ResolvedPiece{profiles::minimal_elliptic_chi2(), {elliptic("E")}, {}}, {0, 1},
        "D1 and D2 pass through a point of B0 with tangent conditions producing a "
        "[3,3]-point: one elliptic Gorenstein singularity of degree 1"));
    return out;
}

// Quintic sections of two planes glued along a line; the two pieces are
// five-nodal K3 double covers, degenerated independently through quadruple
// points of their branch quintics.
std::vector<Scenario> two_k3_family() {
    std::vector<Scenario> out;
    const CurveData line = CurveData::smooth("L", 0);
    const CurveData two_lines{{{"L1", 0}, {"L2", 0}}, {}};
    auto k3_piece = [] { return NormalizationPiece{SmoothPiece{profiles::k3()}}; };
    auto degenerate_piece = [](CurveData exc) {
        return NormalizationPiece{ResolvedPiece{profiles::rational(), {std::move(exc)}, {}}};
    };
    auto add = [&](const char* id, std::vector<NormalizationPiece> pieces, HodgeType expected,
                   const char* citation) {
        Scenario s = nonnormal(id, std::move(pieces), line, two_lines, expected, citation);
        s.numerics = TripleNumerics{4, 2, 1, true, true, 1};
        out.push_back(std::move(s));
    };

    add("two-k3-generic", {k3_piece(), k3_piece()}, {0, 0},
        "double cover of two planes glued along a line, branched over a general quintic "
        "section: two five-nodal K3 pieces glued along pullbacks of the line");
    add("two-k3-one-elliptic", {degenerate_piece(elliptic("E")), k3_piece()}, {0, 1},
        "the branch quintic on one plane acquires an ordinary quadruple point: that K3 "
        "piece degenerates to a rational surface with an exceptional elliptic curve");
    add("two-k3-one-cusp", {degenerate_piece(cycle()), k3_piece()}, {1, 0},
        "the quadruple point on one plane degenerates: exceptional cycle of rationals");
    add("two-k3-two-elliptic",
        {degenerate_piece(elliptic("E1")), degenerate_piece(elliptic("E2"))}, {0, 2},
        "ordinary quadruple points on both planes");
    add("two-k3-cusp-elliptic", {degenerate_piece(cycle()), degenerate_piece(elliptic("E"))},
        {1, 1}, "a degenerate quadruple point on one plane, an ordinary one on the other");
    add("two-k3-two-cusps", {degenerate_piece(cycle()), degenerate_piece(cycle())}, {2, 0},
        "degenerate quadruple points on both planes");
    return out;
}

// Double covers of the cone over the twisted cubic inside P(1,1,2,3); the
// non-normal members have a doubled cubic section in the branch divisor.
std::vector<Scenario> cone18_family() {
    std::vector<Scenario> out;
    Scenario generic = normal(
        "cone18-generic", SmoothPiece{profiles::general_type_pg2()}, {0, 0},
        "double cover of the cone over the twisted cubic branched over a general "
        "degree-10 divisor; the only singularity is a rational T-singularity of type "
        "1/18(1,5)");
    generic.h11 = 29;
    out.push_back(std::move(generic));

    auto add = [&out](const char* id, CurveData dbar, HodgeType expected, const char* citation) {
        Scenario s = nonnormal(id, {SmoothPiece{profiles::rational()}},
                               CurveData::smooth("D", 0), std::move(dbar), expected, citation);
        s.numerics = TripleNumerics{1, -1, 1, true, true, 1};
        out.push_back(std::move(s));
    };
    add("cone18-smooth-double-curve", CurveData::smooth("Dbar", 2), {0, 2},
        "the branch divisor acquires a doubled cubic section: the double curve is a smooth "
        "rational curve with smooth genus-2 conductor cover, the normalization a rational "
        "surface with anti-ample canonical class");
    add("cone18-one-node", CurveData::irreducible_nodal("Dbar", 1, 1), {1, 1},
        "the conductor cover acquires one node, a degenerate cusp on the surface");
    add("cone18-two-nodes", CurveData::irreducible_nodal("Dbar", 0, 2), {2, 0},
        "the conductor cover acquires two nodes");
    return out;
}

// A degenerate member of the previous family whose base breaks into two
// weighted planes; the pieces are a del Pezzo and a K3 glued along an
// elliptic curve.
std::vector<Scenario> k3_rational_family() {
    std::vector<Scenario> out;
    SurfaceProfile del_pezzo = profiles::rational();
    del_pezzo.name = "singular del Pezzo";

    Scenario generic = nonnormal(
        "k3-rational-generic",
        {SmoothPiece{del_pezzo}, SmoothPiece{profiles::k3()}}, elliptic("D"),
        CurveData{{{"D1", 1}, {"D2", 1}}, {}}, {0, 1},
        "double cover of two weighted planes glued along a line: a del Pezzo piece with a "
        "1/3(1,1) point and a K3 piece with an A_2 point, glued along an elliptic "
        "conductor curve");
    generic.numerics = TripleNumerics{3, 0, 0, true, true, 1};
    out.push_back(std::move(generic));

    Scenario nodal = nonnormal(
        "k3-rational-nodal",
        {SmoothPiece{del_pezzo}, SmoothPiece{profiles::k3()}},
        CurveData::irreducible_nodal("D", 0, 1),
        CurveData{{{"D1", 0}, {"D2", 0}}, {{"D1", "D1"}, {"D2", "D2"}}}, {1, 0},
        "the branch divisor becomes tangent to the gluing line: the elliptic conductor "
        "curve and both its preimages acquire a node");
    nodal.numerics = TripleNumerics{3, 0, 0, true, true, 1};
    out.push_back(std::move(nodal));
    return out;
}

std::vector<DegenerationChain> catalog_chains() {
    return {
        {"chain-planes-cusp",
         {"planes-generic", "planes-one-elliptic", "planes-one-cusp", "planes-elliptic-cusp"}},
        {"chain-planes-full",
         {"planes-generic", "planes-one-elliptic", "planes-one-cusp", "planes-elliptic-cusp",
          "planes-two-cusps"}},
        {"chain-planes-elliptic",
         {"planes-generic", "planes-one-elliptic", "planes-two-elliptic",
          "planes-elliptic-cusp", "planes-two-cusps"}},
        {"chain-cover-d2",
         {"cover-split-generic", "cover-split-33point", "cover-d2", "cover-d2-one-tangency",
          "cover-d2-two-tangencies"}},
        {"chain-cover-d4",
         {"cover-split-generic", "cover-split-33point", "cover-d4", "cover-d4-one-tangency",
          "cover-d4-two-tangencies"}},
        {"chain-cover-d3",
         {"cover-split-generic", "cover-split-33point", "cover-d3", "cover-d3-one-tangency",
          "cover-d3-two-tangencies"}},
        {"chain-cover-d1-branch",
         {"cover-d1", "cover-d1-quadruple", "cover-d1-degenerate-quadruple",
          "cover-d1-degenerate-quadruple-tangent"}},
        {"chain-cover-d1-conductor",
         {"cover-d1", "cover-d1-tangent", "cover-d1-quadruple-tangent",
          "cover-d1-degenerate-quadruple-tangent"}},
        {"chain-cover-d5", {"cover-d5", "cover-d5-one-node", "cover-d5-two-nodes"}},
        {"chain-two-k3-elliptic",
         {"two-k3-generic", "two-k3-one-elliptic", "two-k3-two-elliptic",
          "two-k3-cusp-elliptic", "two-k3-two-cusps"}},
        {"chain-two-k3-cusp",
         {"two-k3-generic", "two-k3-one-elliptic", "two-k3-one-cusp", "two-k3-cusp-elliptic",
          "two-k3-two-cusps"}},
        {"chain-cone18",
         {"cone18-generic", "cone18-smooth-double-curve", "cone18-one-node",
          "cone18-two-nodes"}},
        {"chain-k3-rational", {"k3-rational-generic", "k3-rational-nodal"}},
    };
}

Catalog build_catalog() {
    Catalog cat;
    auto append = [&cat](std::vector<Scenario> block) {
        cat.scenarios.insert(cat.scenarios.end(), std::make_move_iterator(block.begin()),
                             std::make_move_iterator(block.end()));
    };
    append(plane_family());
    append(strata());
    append(cover_family());
    append(two_k3_family());
    append(cone18_family());
    append(k3_rational_family());
    cat.chains = catalog_chains();
    return cat;
}

}  // namespace

const Catalog& builtin_catalog() {
    static const Catalog cat = build_catalog();
    return cat;
}

}  // namespace hodgechase
