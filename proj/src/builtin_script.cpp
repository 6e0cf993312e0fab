#include "sigcheck/script.h"

#include <initializer_list>
#include <utility>

namespace sigcheck {

namespace {

const Radius P = Radius::p();
const Radius P1 = Radius::one_plus_p();

Radius L(double v) { return Radius::literal(v); }

AnnulusSpec A(Radius lo, Radius hi) { return AnnulusSpec{lo, hi}; }

const AnnulusSpec kOneHabitat = A(P, P1);
const AnnulusSpec kHalfHabitat = A(L(1.0), P1);

ClassSpec one(int count, AnnulusSpec a = kOneHabitat, std::string label = "one") {
    return ClassSpec{std::move(label), Weight::One, a, count};
}

ClassSpec half(int count, AnnulusSpec a, std::string label = "half") {
    return ClassSpec{std::move(label), Weight::Half, a, count};
}

std::string describe(const ClassSpec& c) {
    return std::to_string(c.count) + (c.count == 1 ? " point" : " points") + " of weight " +
           to_string(c.weight) + " in " + c.annulus.to_string();
}

std::string impossible(const std::vector<ClassSpec>& classes) {
    std::string s = "impossible: ";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i > 0) s += i + 1 == classes.size() ? " and " : ", ";
        s += describe(classes[i]);
    }
    return s;
}

PrintedPhi phi(std::string a, std::string b, double value, std::string printed_as, std::string note = "",
               std::string erratum = "") {
    return PrintedPhi{std::move(a), std::move(b), value, std::move(printed_as), std::move(note), std::move(erratum)};
}

PrintedSum equals(double value, std::optional<Composition> comp = std::nullopt) {
    PrintedSum s;
    s.kind = PrintedSum::Kind::Equals;
    s.value = value;
    s.composition = comp;
    return s;
}

PrintedSum lower(double value, std::optional<Composition> comp = std::nullopt,
                 std::vector<std::pair<int, double>> terms = {}) {
    PrintedSum s;
    s.kind = PrintedSum::Kind::LowerBound;
    s.value = value;
    s.composition = comp;
    s.terms = std::move(terms);
    return s;
}

PrintedSum minimum(PrintedSum s) {
    s.minimum = true;
    return s;
}

PrintedSum with_note(PrintedSum s, std::string note) {
    s.note = std::move(note);
    return s;
}

PrintedSum with_erratum(PrintedSum s, std::string erratum) {
    s.erratum = std::move(erratum);
    return s;
}

// Expands runs like {{"blue", 1}, {"red", 8}} into a label sequence.
std::vector<std::string> runs(std::initializer_list<std::pair<const char*, int>> parts) {
    std::vector<std::string> out;
    for (const auto& [label, n] : parts) {
        for (int i = 0; i < n; ++i) out.emplace_back(label);
    }
    return out;
}

PrintedSum on(PrintedSum s, std::vector<std::string> arrangement) {
    s.arrangement = std::move(arrangement);
    return s;
}

ClaimSpec capacity(std::string id, ClassSpec c) {
    ClaimSpec claim;
    claim.id = std::move(id);
    claim.kind = ClaimKind::Capacity;
    claim.statement = impossible({c});
    claim.classes = {std::move(c)};
    return claim;
}

ClaimSpec arrangement(std::string id, std::vector<ClassSpec> classes) {
    ClaimSpec claim;
    claim.id = std::move(id);
    claim.kind = ClaimKind::Arrangement;
    claim.statement = impossible(classes);
    claim.classes = std::move(classes);
    return claim;
}

// The usual shape: `m` weight-1 points in the full habitat and `h` halves in
// [lo, 1+p], with the three pair bounds printed.
ClaimSpec two_class(std::string id, int m, int h, double lo, double b11, double bhh, double b1h) {
    ClaimSpec claim = arrangement(std::move(id), {one(m), half(h, A(L(lo), P1))});
    const std::string r = L(lo).to_string();
    claim.printed_phis = {phi("one", "one", b11, "Phi_p(p,1+p)"), phi("half", "half", bhh, "Phi_q(" + r + ",1+q)"),
                          phi("one", "half", b1h, "Phi_p(" + r + ",1+p)")};
    return claim;
}

ChainStep step(std::string justification, std::string target, ClassSpec derives, std::string note = "") {
    ChainStep s;
    s.justification = std::move(justification);
    s.target = std::move(target);
    derives.label.clear();
    s.derives = std::move(derives);
    s.note = std::move(note);
    return s;
}

ChainStep close(std::string justification) {
    ChainStep s;
    s.justification = std::move(justification);
    return s;
}

ClaimSpec chain(std::string id, int m, int h, std::vector<ChainStep> steps) {
    ClaimSpec claim;
    claim.id = std::move(id);
    claim.kind = ClaimKind::Chain;
    claim.statement = impossible({one(m), half(h, kHalfHabitat)});
    claim.hypothesis = Hypothesis{m, h};
    claim.steps = std::move(steps);
    return claim;
}

using C = Composition;

void add_easy_cases(std::vector<ClaimSpec>& out) {
    {
        ClaimSpec c = capacity("lemma-3.1", one(12));
        c.printed_phis = {phi("one", "one", 31.25, "Phi_p(p,1+p) > 31.25")};
        c.printed_sums = {lower(375, std::nullopt, {{12, 31.25}})};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = capacity("lemma-3.2.inner", half(11, A(L(1.0), L(1.25))));
        c.printed_phis = {phi("half", "half", 32.98, "Phi_q(1,1.25)")};
        c.printed_sums = {lower(362)};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = capacity("lemma-3.2.outer", half(17, A(L(1.25), P1)));
        c.printed_phis = {phi("half", "half", 21.31, "Phi_q(1.25,1+q)")};
        c.printed_sums = {lower(362)};
        out.push_back(std::move(c));
    }
    out.push_back(chain("lemma-3.2", 0, 27,
                        {step("lemma-3.2.inner", "half", half(17, A(L(1.25), P1))), close("lemma-3.2.outer")}));

    {
        ClaimSpec c = two_class("fact-3.4.1", 2, 13, 1.32, 31.25, 22.77, 29.03);
        c.printed_compositions = {C{0, 11, 4}, C{1, 12, 2}};
        c.printed_sums = {lower(366, C{0, 11, 4}), lower(362, C{1, 12, 2})};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = capacity("lemma-3.3.inner", half(12, A(L(1.0), L(1.32))));
        c.printed_phis = {phi("half", "half", 31.18, "Phi_q(1,1.32)")};
        c.printed_sums = {lower(374)};
        out.push_back(std::move(c));
    }
    out.push_back(chain("lemma-3.3", 2, 24,
                        {step("fact-3.4.1", "half", half(12, A(L(1.0), L(1.32)))), close("lemma-3.3.inner")}));

    {
        ClaimSpec c = two_class("fact-3.6.1", 4, 11, 1.25, 31.25, 21.31, 26.69);
        c.printed_compositions = {C{0, 7, 8}, C{1, 8, 6}, C{2, 9, 4}, C{3, 10, 2}};
        c.printed_sums = {minimum(with_note(lower(360.23, C{3, 10, 2}, {{3, 31.25}, {10, 21.31}, {2, 26.69}}),
                                            "printed with '=' but computed from truncated constants"))};
        out.push_back(std::move(c));
    }
    out.push_back(chain("lemma-3.4", 4, 21,
                        {step("fact-3.6.1", "half", half(11, A(L(1.0), L(1.25)))), close("lemma-3.2.inner")}));

    {
        ClaimSpec c = two_class("fact-3.7.1", 5, 10, 1.23, 31.25, 20.77, 25.90);
        c.printed_compositions = {C{0, 5, 10}, C{1, 6, 8}, C{2, 7, 6}, C{3, 8, 4}, C{4, 9, 2}};
        c.printed_sums = {minimum(lower(362.85, C{0, 5, 10}, {{5, 20.77}, {10, 25.9}}))};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = capacity("lemma-3.5.inner", half(11, A(L(1.0), L(1.23))));
        c.printed_phis = {phi("half", "half", 33.53, "Phi_q(1,1.23)")};
        c.printed_sums = {lower(368)};
        out.push_back(std::move(c));
    }
    out.push_back(chain("lemma-3.5", 5, 20,
                        {step("fact-3.7.1", "half", half(11, A(L(1.0), L(1.23)))), close("lemma-3.5.inner")}));
}

void add_six_and_seven(std::vector<ClaimSpec>& out) {
    {
        ClaimSpec c = two_class("fact-4.1", 6, 8, 1.259, 31.25, 21.59, 27.03);
        c.printed_phis[1].erratum = "printed 21.59 but the sum uses 21.53; the true value is 21.536";
        c.printed_compositions = {C{0, 2, 12}, C{1, 3, 10}, C{2, 4, 8}, C{3, 5, 6}, C{4, 6, 4}, C{5, 7, 2}};
        PrintedSum s = minimum(equals(361.09, C{5, 7, 2}));
        s.terms = {{5, 31.25}, {7, 21.53}, {2, 27.03}};
        s.note = "the listed terms add up to 361.02; 361.09 is the true minimum";
        c.printed_sums = {s};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = capacity("fact-4.2", half(11, A(L(1.0), L(1.259))));
        c.printed_phis = {phi("half", "half", 32.74, "Phi_q(1,1.259)")};
        c.printed_sums = {minimum(equals(360.16))};
        out.push_back(std::move(c));
    }
    out.push_back(chain("lemma-4.3", 6, 18,
                        {step("fact-4.1", "half", half(11, A(L(1.0), L(1.259)))), close("fact-4.2")}));

    {
        ClaimSpec c = two_class("fact-5.1", 7, 8, 1.2, 31.25, 19.85, 24.57);
        c.printed_compositions = {C{0, 1, 14}, C{1, 2, 12}, C{2, 3, 10}, C{3, 4, 8},
                                  C{4, 5, 6},  C{5, 6, 4},  C{6, 7, 2}};
        c.printed_sums = {minimum(lower(363.83, C{0, 1, 14}, {{1, 19.85}, {14, 24.57}}))};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = arrangement("fact-5.2", {half(9, A(L(1.0), L(1.2)), "red"), half(2, A(L(1.0), L(1.33)), "blue")});
        c.printed_sums = {minimum(on(equals(364.606), runs({{"blue", 1}, {"red", 1}, {"blue", 1}, {"red", 8}}))),
                          on(equals(368.057), runs({{"blue", 2}, {"red", 9}}))};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = two_class("fact-5.3", 7, 6, 1.33, 31.25, 22.93, 29.32);
        c.printed_compositions = {C{1, 0, 12}, C{2, 1, 10}, C{3, 2, 8}, C{4, 3, 6}, C{5, 4, 4}, C{6, 5, 2}};
        c.printed_sums = {minimum(lower(360.79, C{6, 5, 2}, {{6, 31.25}, {5, 22.93}, {2, 29.32}}))};
        out.push_back(std::move(c));
    }
    out.push_back(chain("lemma-5.4", 7, 16,
                        {step("fact-5.1", "half", half(9, A(L(1.0), L(1.2)))),
                         step("fact-5.2", "blue", half(6, A(L(1.33), P1))), close("fact-5.3")}));
}

void add_eight_and_nine(std::vector<ClaimSpec>& out) {
    {
        ClaimSpec c = two_class("fact-6.1", 8, 6, 1.21, 31.25, 20.17, 25.03);
        c.printed_compositions = {C{2, 0, 12}, C{3, 1, 10}, C{4, 2, 8}, C{5, 3, 6}, C{6, 4, 4}, C{7, 5, 2}};
        c.printed_sums = {minimum(lower(362.86, C{2, 0, 12}, {{2, 31.25}, {12, 25.03}}))};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = arrangement("fact-6.2", {one(1, A(P, L(1.88))), half(9, A(L(1.0), L(1.21)))});
        c.printed_phis = {phi("half", "half", 34.10, "Phi_q(1,1.21)"), phi("one", "half", 44.01, "Phi_p(1,1.88)")};
        c.printed_sums = {minimum(lower(360.82, C{0, 8, 2}, {{8, 34.10}, {2, 44.01}}))};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = arrangement("fact-6.3", {one(8, A(L(1.88), P1)), half(4, A(L(1.29), P1))});
        c.printed_phis = {phi("one", "one", 34.008, "Phi_p(p,1.88)", "argument notation differs from the class annulus [1.88, 1+p]"),
                          phi("half", "half", 22.21, "Phi_q(1.29,1+q)"), phi("one", "half", 28.11, "Phi_p(1.29,1+p)")};
        c.printed_compositions = {C{4, 0, 8}, C{5, 1, 6}, C{6, 2, 4}, C{7, 3, 2}};
        c.printed_sums = {minimum(lower(360.88, C{4, 0, 8}, {{4, 34}, {8, 28.11}}))};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = arrangement("fact-6.4", {half(9, A(L(1.0), L(1.21)), "red"), half(2, A(L(1.0), L(1.29)), "blue")});
        c.printed_sums = {minimum(on(equals(366.49), runs({{"blue", 1}, {"red", 1}, {"blue", 1}, {"red", 8}}))),
                          on(equals(368.66), runs({{"blue", 2}, {"red", 9}}))};
        out.push_back(std::move(c));
    }
    out.push_back(chain("lemma-6.5", 8, 14,
                        {step("fact-6.1", "half", half(9, A(L(1.0), L(1.21)))),
                         step("fact-6.2", "one", one(8, A(L(1.88), P1))),
                         step("fact-6.3", "half", half(11, A(L(1.0), L(1.29)))), close("fact-6.4")}));

    {
        ClaimSpec c = two_class("fact-7.1", 9, 4, 1.22, 31.25, 20.48, 25.47);
        c.printed_compositions = {C{5, 0, 8}, C{6, 1, 6}, C{7, 2, 4}, C{8, 3, 2}};
        c.printed_sums = {minimum(with_erratum(lower(362.01, C{5, 0, 8}, {{5, 31.25}, {8, 25.47}}),
                                               "the listed terms add up to 360.01, not 362.01"))};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = arrangement("fact-7.2", {one(1, A(P, L(1.85))), half(9, A(L(1.0), L(1.22)))});
        c.printed_phis = {phi("half", "half", 33.82, "Phi_q(1,1.22)"), phi("one", "half", 44.76, "Phi_p(1,1.85)")};
        c.printed_sums = {minimum(lower(360.08, C{0, 8, 2}, {{8, 33.82}, {2, 44.76}}))};
        out.push_back(std::move(c));
    }
    const std::string notation = "argument notation differs from the class annulus [1.85, 1+p]";
    {
        ClaimSpec c = arrangement("fact-7.3", {one(9, A(L(1.85), P1)), half(2, A(L(1.45), P1))});
        c.printed_phis = {phi("one", "one", 34.008, "Phi_p(p,1.85)", notation),
                          phi("half", "half", 23.95, "Phi_q(1.45,1+q)"), phi("one", "half", 32.06, "Phi_p(1.45,1+p)")};
        c.printed_compositions = {C{7, 0, 4}, C{8, 1, 2}};
        c.printed_sums = {minimum(lower(360.07, C{8, 1, 2}, {{8, 34}, {1, 23.95}, {2, 32.06}}))};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = arrangement("fact-7.4", {one(9, A(L(1.85), P1)), half(3, A(L(1.24), P1))});
        c.printed_phis = {phi("one", "one", 34.008, "Phi_p(p,1.85)", notation),
                          phi("half", "half", 21.05, "Phi_q(1.24,1+q)"), phi("one", "half", 26.30, "Phi_p(1.24,1+p)")};
        c.printed_compositions = {C{6, 0, 6}, C{7, 1, 4}, C{8, 2, 2}};
        c.printed_sums = {minimum(lower(361.8, C{6, 0, 6}, {{6, 34}, {6, 26.3}}))};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = arrangement("fact-7.5", {one(9, A(L(1.85), P1)), half(4, A(L(1.19), P1))});
        c.printed_phis = {phi("one", "one", 34.008, "Phi_p(p,1.85)", notation),
                          phi("half", "half", 19.50, "Phi_q(1.19,1+q)"), phi("one", "half", 24.08, "Phi_p(1.19,1+p)")};
        c.printed_compositions = {C{5, 0, 8}, C{6, 1, 6}, C{7, 2, 4}, C{8, 3, 2}};
        c.printed_sums = {minimum(lower(362, C{5, 0, 8}, {{5, 34}, {8, 24}}))};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = arrangement("fact-7.6", {half(9, A(L(1.0), L(1.19)), "red"), half(1, A(L(1.0), L(1.24)), "b1"),
                                               half(1, A(L(1.0), L(1.45)), "b2")});
        c.printed_sums = {
            minimum(on(lower(361.2, std::nullopt, {{7, 34.6}, {2, 33.2}, {2, 26.3}}),
                       runs({{"b1", 1}, {"red", 1}, {"b2", 1}, {"red", 8}}))),
            on(lower(362.6, std::nullopt, {{8, 34.6}, {1, 33.2}, {2, 26.3}}), runs({{"b1", 1}, {"b2", 1}, {"red", 9}}))};
        out.push_back(std::move(c));
    }
    out.push_back(chain("lemma-7.7", 9, 12,
                        {step("fact-7.1", "half", half(9, A(L(1.0), L(1.22)))),
                         step("fact-7.2", "one", one(9, A(L(1.85), P1))),
                         step("fact-7.3", "half", half(11, A(L(1.0), L(1.45)))),
                         step("fact-7.4", "half", half(10, A(L(1.0), L(1.24)))),
                         step("fact-7.5", "half", half(9, A(L(1.0), L(1.19)))), close("fact-7.6")}));
}

void add_ten_and_eleven(std::vector<ClaimSpec>& out) {
    {
        ClaimSpec c = two_class("fact-8.1", 10, 2, 1.2931, 31.2555, 22.2806, 28.2107);
        c.printed_compositions = {C{8, 0, 4}, C{9, 1, 2}};
        c.printed_sums = {equals(360.002, C{9, 1, 2}),
                          minimum(lower(360.0015, C{9, 1, 2}, {{9, 31.2555}, {1, 22.2806}, {2, 28.2107}}))};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = arrangement("fact-8.2", {one(1, A(P, L(1.59))), half(9, A(L(1.0), L(1.2931)))});
        c.printed_phis = {phi("half", "half", 31.8557, "Phi_q(1,1.2931)"), phi("one", "half", 52.6013, "Phi_p(1,1.59)")};
        c.printed_sums = {minimum(lower(360.0482, C{0, 8, 2}, {{8, 31.8557}, {2, 52.6013}}))};
        out.push_back(std::move(c));
    }
    struct Part {
        const char* id;
        int h;
        double lo;
        double value;
        std::vector<Composition> comps;
        Composition min;
        const char* note;
    };
    const std::vector<Part> parts = {
        {"fact-8.3a", 1, 1.2571, 360.0067, {}, C{9, 0, 2}, ""},
        {"fact-8.3b", 2, 1.1513, 360.022, {C{8, 0, 4}, C{9, 1, 2}}, C{8, 0, 4},
         "the half-half term is printed as Phi_q(1.153,1+q); the class annulus starts at 1.1513"},
        {"fact-8.3c", 3, 1.1254, 360.021, {C{7, 0, 6}, C{8, 1, 4}, C{9, 2, 2}}, C{7, 0, 6}, ""},
        {"fact-8.3d", 4, 1.1138, 360.036, {C{6, 0, 8}, C{7, 1, 6}, C{8, 2, 4}, C{9, 3, 2}}, C{6, 0, 8}, ""},
        {"fact-8.3e", 5, 1.1072, 360.033, {C{5, 0, 10}, C{6, 1, 8}, C{7, 2, 6}, C{8, 3, 4}, C{9, 4, 2}}, C{5, 0, 10}, ""},
    };
    for (const auto& part : parts) {
        ClaimSpec c = arrangement(part.id, {one(10, A(L(1.59), P1)), half(part.h, A(L(part.lo), P1))});
        c.printed_compositions = part.comps;
        c.printed_sums = {minimum(with_note(equals(part.value, part.min), part.note))};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = arrangement("lemma-8.3.final",
                                  {half(6, A(L(1.0), L(1.1072)), "red"), half(1, A(L(1.0), L(1.1138)), "b1"),
                                   half(1, A(L(1.0), L(1.1254)), "b2"), half(1, A(L(1.0), L(1.1513)), "b3"),
                                   half(1, A(L(1.0), L(1.2571)), "b4")});
        c.printed_sums = {minimum(with_note(
            on(equals(360.0047), runs({{"b1", 1}, {"red", 1}, {"b2", 1}, {"red", 1}, {"b3", 1}, {"red", 1}, {"b4", 1}, {"red", 3}})),
            "terms printed as Phi_q(1,1.072) and Phi_q(1,1153); the class annuli end at 1.1072 and 1.1513"))};
        out.push_back(std::move(c));
    }
    out.push_back(chain("lemma-8.3", 10, 10,
                        {step("fact-8.1", "half", half(9, A(L(1.0), L(1.2931)))),
                         step("fact-8.2", "one", one(10, A(L(1.59), P1))),
                         step("fact-8.3a", "half", half(10, A(L(1.0), L(1.2571))), "printed as 1.12571"),
                         step("fact-8.3b", "half", half(9, A(L(1.0), L(1.1513)))),
                         step("fact-8.3c", "half", half(8, A(L(1.0), L(1.1254)))),
                         step("fact-8.3d", "half", half(7, A(L(1.0), L(1.1138)))),
                         step("fact-8.3e", "half", half(6, A(L(1.0), L(1.1072)))), close("lemma-8.3.final")}));

    {
        ClaimSpec c = arrangement("fact-9.1a", {one(11), half(1, A(L(1.2), P1))});
        c.printed_phis = {phi("one", "one", 31.25, "Phi_p(p,1+p) > 31.25"), phi("one", "half", 24.57, "Phi_p(1.2,1+p) > 24.57")};
        c.printed_sums = {minimum(lower(361.64, C{10, 0, 2}, {{10, 31.25}, {2, 24.57}}))};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = two_class("fact-9.1b", 11, 2, 1.12, 31.25, 16.40, 19.94);
        c.printed_compositions = {C{9, 0, 4}, C{10, 1, 2}};
        c.printed_sums = {minimum(equals(361.09, C{9, 0, 4}))};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = capacity("fact-9.2", one(11, A(L(1.5), P1)));
        c.printed_sums = {minimum(equals(361.88))};
        out.push_back(std::move(c));
    }
    {
        ClaimSpec c = arrangement("fact-9.3", {one(1, A(P, L(1.5))), half(7, A(L(1.0), L(1.12)), "red"),
                                               half(1, A(L(1.0), L(1.2)), "blue")});
        c.printed_sums = {
            minimum(with_erratum(on(equals(365.72), runs({{"one", 1}, {"red", 1}, {"blue", 1}, {"red", 6}})),
                                 "the stated terms evaluate to 365.573")),
            on(equals(368.11), runs({{"one", 1}, {"blue", 1}, {"red", 7}}))};
        out.push_back(std::move(c));
    }
    out.push_back(chain("lemma-9.4", 11, 8,
                        {step("fact-9.1a", "half", half(8, A(L(1.0), L(1.2)))),
                         step("fact-9.1b", "half", half(7, A(L(1.0), L(1.12)))),
                         step("fact-9.2", "one", one(1, A(P, L(1.5)))), close("fact-9.3")}));
}

}  // namespace

ProofScript builtin_paper_script() {
    ProofScript script;
    script.name = "sig-14.5";
    add_easy_cases(script.claims);
    add_six_and_seven(script.claims);
    add_eight_and_nine(script.claims);
    add_ten_and_eleven(script.claims);
    return script;
}

}  // namespace sigcheck
