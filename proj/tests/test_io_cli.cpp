#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "convextri/cli.hpp"
#include "convextri/io.hpp"
#include "convextri/packing.hpp"
#include "convextri/svg.hpp"
#include "convextri/triangulate.hpp"
#include "helpers.hpp"

using namespace convextri;
using testutil::cycle_chords;

namespace {

struct CoutCapture {
    std::ostringstream ss;
    std::streambuf* old;
    CoutCapture() : old(std::cout.rdbuf(ss.rdbuf())) {}
    ~CoutCapture() { std::cout.rdbuf(old); }
    std::string text() const { return ss.str(); }
};

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream f(p);
    f << content;
    return p;
}

int count_occurrences(const std::string& hay, const std::string& needle) {
    int cnt = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + 1))
        ++cnt;
    return cnt;
}

// lines within the group opened by `header`
std::string group_of(const std::string& svg, const std::string& header) {
    auto start = svg.find(header);
    REQUIRE(start != std::string::npos);
    auto end = svg.find("</g>", start);
    return svg.substr(start, end - start);
}

} // namespace

TEST_CASE("parse_instance JSON form") {
    ConvexInstance inst = parse_instance(R"({"n":6,"forbidden":[[0,3],[1,4],[2,5]]})");
    CHECK(inst.n() == 6);
    CHECK(inst.forbidden() == std::vector<Chord>{Chord(0, 3), Chord(1, 4), Chord(2, 5)});
    CHECK_THROWS_AS(parse_instance(R"({"n":5,"forbidden":[[0,5]]})"), InvalidChord);
    CHECK_THROWS_AS(parse_instance(R"({"n":5,"forbidden":[[0,0]]})"), InvalidChord);
    CHECK_THROWS_AS(parse_instance(R"({"n":6,"forbidden":[[0,2],[2,0]]})"), InvalidChord);
    CHECK_THROWS_AS(parse_instance(R"({"n":6,)"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"forbidden":[]})"), ParseError);
    CHECK(parse_instance(R"({"n":4})").forbidden().empty());
}

TEST_CASE("parse_instance line form") {
    std::string text = "# the triangulable 7-cycle\n"
                       "n 7\n"
                       "e 0 2\ne 2 6\ne 4 6\ne 1 4\ne 1 3\ne 3 5\ne 0 5\n";
    ConvexInstance inst = parse_instance(text);
    CHECK(inst.n() == 7);
    CHECK(inst.forbidden().size() == 7);
    CHECK(inst.forbidden() == cycle_chords({0, 2, 6, 4, 1, 3, 5}));

    CHECK_THROWS_AS(parse_instance("e 0 2\nn 7\n"), ParseError); // edge before n
    CHECK_THROWS_AS(parse_instance("n 7\nq 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("n 7\ne 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance(""), ParseError);
    try {
        parse_instance("n 7\ne 0 9\n");
        FAIL("expected InvalidChord");
    } catch (const InvalidChord& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("parse after serialize is the identity") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);
        auto ds = testutil::diagonal_universe(n);
        std::shuffle(ds.begin(), ds.end(), rng);
        int sz = static_cast<int>(rng() % std::min<std::size_t>(ds.size() + 1, 8));
        ConvexInstance inst(n, {ds.begin(), ds.begin() + sz});
        ConvexInstance back = parse_instance(serialize_instance(inst));
        CHECK(back.n() == inst.n());
        CHECK(back.forbidden() == inst.forbidden());
    }
}

TEST_CASE("render_svg is deterministic and structured") {
    ConvexInstance good(7, cycle_chords({0, 2, 6, 4, 1, 3, 5}));
    auto tri = extract(good);
    REQUIRE(tri.has_value());
    std::string svg1 = render_svg(good, tri);
    std::string svg2 = render_svg(good, tri);
    CHECK(svg1 == svg2);
    CHECK(svg1.find("viewBox=\"-1.2 -1.2 2.4 2.4\"") != std::string::npos);
    CHECK(count_occurrences(group_of(svg1, "stroke-dasharray"), "<line") == 7);
    CHECK(count_occurrences(group_of(svg1, "#2244cc"), "<line") == 4);
    CHECK(count_occurrences(group_of(svg1, "#000000\" stroke-width"), "<line") == 7);
    CHECK(count_occurrences(svg1, "<text") == 7);
    CHECK(svg1.find(">v0<") != std::string::npos);
    CHECK(svg1.find(">v6<") != std::string::npos);

    // square with one blue diagonal
    ConvexInstance square(4, {});
    std::string s = render_svg(square, Triangulation{{Chord(0, 2)}});
    CHECK(count_occurrences(group_of(s, "#2244cc"), "<line") == 1);
    CHECK(count_occurrences(group_of(s, "stroke-dasharray"), "<line") == 0);
    // v0 sits on top at (0,-1)
    CHECK(s.find("cx=\"0.000000\" cy=\"-1.000000\"") != std::string::npos);

    // the three-cycle 15-gon layout: twelve dashed chords, full boundary
    Placement fig = remark1_layout(15, {4, 3, 5});
    std::string f = render_svg(fig.induced);
    CHECK(count_occurrences(group_of(f, "stroke-dasharray"), "<line") == 12);
    CHECK(count_occurrences(group_of(f, "#000000\" stroke-width"), "<line") == 15);
}

TEST_CASE("cli: decide and triangulate with exit codes") {
    auto bad = temp_file("ct_bad.json",
                         serialize_instance(ConvexInstance(7, cycle_chords({0, 2, 4, 6, 1, 3, 5}))));
    auto good = temp_file("ct_good.json",
                          serialize_instance(ConvexInstance(7, cycle_chords({0, 2, 6, 4, 1, 3, 5}))));
    {
        CoutCapture cap;
        CHECK(run_cli({"decide", "--input", bad.string()}) == 1);
        CHECK(cap.text() == "triangulable: false\n");
    }
    {
        CoutCapture cap;
        CHECK(run_cli({"decide", "--input", good.string(), "--json"}) == 0);
        auto doc = nlohmann::json::parse(cap.text());
        CHECK(doc["triangulable"] == true);
        CHECK(doc["n"] == 7);
        CHECK(doc.contains("canonical_key"));
        CHECK(doc["forbidden"].size() == 7);
    }
    {
        CoutCapture cap;
        CHECK(run_cli({"triangulate", "--input", good.string()}) == 0);
        CHECK(cap.text() == "triangulable: true\ndiagonals: 1-5 1-6 2-4 2-5\n");
    }
    {
        CoutCapture cap;
        CHECK(run_cli({"count", "--input", good.string(), "--json"}) == 0);
        auto doc = nlohmann::json::parse(cap.text());
        CHECK(doc["count"] == "1");
    }
    {
        CoutCapture cap;
        CHECK(run_cli({"count", "--input", bad.string()}) == 1); // zero triangulations
    }
}

TEST_CASE("cli: classify and skewness") {
    auto ex1 = temp_file("ct_ex1.json", R"({"n":10,"forbidden":[[0,2],[0,8],[1,3],[1,7],[1,9],[3,5],[3,6],[2,4]]})");
    {
        CoutCapture cap;
        CHECK(run_cli({"classify", "--input", ex1.string(), "--json"}) == 1);
        auto doc = nlohmann::json::parse(cap.text());
        CHECK(doc["classification"] == "blocked-fstar");
        CHECK(doc["witness"]["form"] == "arc");
        CHECK(doc["witness"]["k"] == 4);
        CHECK(doc["triangulable"] == false);
    }
    auto e3ii = temp_file(
        "ct_e3ii.json",
        R"({"n":11,"forbidden":[[0,2],[0,7],[0,9],[1,3],[1,8],[1,10],[2,4],[2,6],[3,5],[5,9]]})");
    {
        CoutCapture cap;
        CHECK(run_cli({"classify", "--input", e3ii.string()}) == 1);
        CHECK(cap.text().find("classification: blocked-jstar") != std::string::npos);
        CHECK(cap.text().find("witness: type-2 j1=6,7,8 j2=5,9") != std::string::npos);
    }
    auto empty5 = temp_file("ct_empty5.json", R"({"n":5,"forbidden":[]})");
    {
        CoutCapture cap;
        CHECK(run_cli({"skewness", "--input", empty5.string(), "--json"}) == 0);
        auto doc = nlohmann::json::parse(cap.text());
        CHECK(doc["sk_c"] == 3);
        CHECK(doc["max_plane"] == 7);
        CHECK(doc["formula_applicable"] == true);
    }
}

TEST_CASE("cli: pack subcommands") {
    {
        CoutCapture cap;
        CHECK(run_cli({"pack", "two-regular", "6,3", "--json"}) == 0);
        auto doc = nlohmann::json::parse(cap.text());
        CHECK(doc["packable"] == true);
        CHECK(doc["n"] == 9);
        CHECK(doc["certificate"].size() == 6);
        CHECK(doc["fallback"] == false);
    }
    {
        CoutCapture cap;
        CHECK(run_cli({"pack", "cycle", "6"}) == 1);
        CHECK(cap.text() == "packable: false\n");
    }
    {
        CoutCapture cap;
        CHECK(run_cli({"pack", "petersen", "5", "2", "--json"}) == 0);
        auto doc = nlohmann::json::parse(cap.text());
        CHECK(doc["n"] == 10);
        CHECK(doc["forbidden"].size() == 15);
    }
    CHECK(run_cli({"pack", "petersen", "5", "3"}) == 2);  // invalid parameters
    CHECK(run_cli({"pack", "two-regular", "abc"}) == 2);
}

TEST_CASE("cli: verify") {
    {
        CoutCapture cap;
        CHECK(run_cli({"verify", "t2", "--n", "7", "--json"}) == 0);
        auto doc = nlohmann::json::parse(cap.text());
        CHECK(doc["theorem"] == "t2");
        CHECK(doc["mismatches"].empty());
        CHECK(doc["instances_checked"] == 2002);
    }
    {
        CoutCapture cap;
        CHECK(run_cli({"verify", "t5", "--n", "7"}) == 0);
        CHECK(cap.text().find("mismatches: 0") != std::string::npos);
    }
    {
        CoutCapture cap;
        CHECK(run_cli({"verify", "t2", "--n", "11", "--samples", "500", "--seed", "9",
                       "--jobs", "2", "--json"}) == 0);
        auto doc = nlohmann::json::parse(cap.text());
        CHECK(doc["samples"] == 500);
        CHECK(doc["seed"] == 9);
    }
    CHECK(run_cli({"verify", "t7", "--n", "6"}) == 2);
}

TEST_CASE("cli: render writes SVG") {
    auto good = temp_file("ct_render.json",
                          serialize_instance(ConvexInstance(7, cycle_chords({0, 2, 6, 4, 1, 3, 5}))));
    auto out = std::filesystem::temp_directory_path() / "ct_render.svg";
    {
        CoutCapture cap;
        CHECK(run_cli({"render", "--input", good.string(), "--triangulation", "--svg",
                       out.string()}) == 0);
    }
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(count_occurrences(group_of(ss.str(), "#2244cc"), "<line") == 4);

    // stdout target
    {
        CoutCapture cap;
        CHECK(run_cli({"render", "--input", good.string()}) == 0);
        CHECK(cap.text().find("<svg") == 0);
    }
    // JSON target carries the document and the drawing together
    {
        CoutCapture cap;
        CHECK(run_cli({"render", "--input", good.string(), "--triangulation", "--json"}) == 0);
        auto doc = nlohmann::json::parse(cap.text());
        CHECK(doc["diagonals"].size() == 4);
        CHECK(doc["svg"].get<std::string>().find("<svg") == 0);
    }
}

TEST_CASE("cli: input errors exit 2") {
    CHECK(run_cli({"decide", "--input", "/nonexistent/path.json"}) == 2);
    CHECK(run_cli({"nonsense"}) == 2);
    CHECK(run_cli({}) == 2);
    auto badjson = temp_file("ct_badjson.json", "{\"n\": 5, ");
    CHECK(run_cli({"decide", "--input", badjson.string()}) == 2);
    auto badchord = temp_file("ct_badchord.json", R"({"n":5,"forbidden":[[0,5]]})");
    CHECK(run_cli({"decide", "--input", badchord.string()}) == 2);
}
