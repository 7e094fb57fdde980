#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "whitney/whitney.hpp"

using namespace whitney;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitFailed = 2;

void print(const ojson& j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

RotationSystem rotation_for(const Cx2Document& doc, bool oracle) {
    if (doc.rotation) return *doc.rotation;
    const auto en = enumerate_for(doc.complex, check_whitney(doc.complex).is_whitney, CheckOptions{oracle});
    if (en.systems.empty()) throw Error(ErrorCode::NonPlanarRotation, "no planar rotation system: " + en.witness);
    return en.systems.front();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Whitney complexes, planar rotation systems, local surfaces and fattenings"};
    app.require_subcommand(1);

    std::string file;
    std::string out_path;
    std::string example;
    bool oracle = false;
    int max_tietze = kDefaultTietzeBudget;

    auto* check = app.add_subcommand("check", "full pipeline report; exit 0 iff the complex is certified");
    auto* links = app.add_subcommand("links", "classify every link graph");
    auto* rotsys = app.add_subcommand("rotsys", "enumerate planar rotation systems up to reversal");
    auto* surfaces = app.add_subcommand("surfaces", "local surfaces of the file's or the first rotation system");
    auto* fat = app.add_subcommand("fatten", "write the fattening with its rotation system and provenance");
    auto* homology = app.add_subcommand("homology", "H1 and the simple-connectivity verdict");
    auto* examples = app.add_subcommand("examples", "print a gallery complex as .cx2");

    for (auto* sub : {check, links, rotsys, surfaces, fat, homology})
        sub->add_option("file", file, ".cx2 input")->required();
    for (auto* sub : {check, rotsys, surfaces, fat})
        sub->add_flag("--oracle", oracle, "use exhaustive search instead of propagation");
    for (auto* sub : {check, homology})
        sub->add_option("--max-tietze", max_tietze, "Tietze move budget")->check(CLI::NonNegativeNumber);
    fat->add_option("-o,--output", out_path, "output .cx2 path")->required();
    examples->add_option("name", example, "gallery name")->required()->check(CLI::IsMember(gallery::names()));
    examples->add_option("-o,--output", out_path, "write to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*examples) {
            const auto text = emit_cx2(*gallery::lookup(example));
            if (out_path.empty()) std::cout << text;
            else write_file(out_path, text);
            return 0;
        }

        Cx2Document doc;
        try {
            doc = load_cx2(file);
        } catch (const Error& e) {
            std::cerr << file << ": " << e.what() << "\n";
            return kExitParse;
        }
        const Complex2& x = doc.complex;

        if (*check) {
            const auto result = run_check(doc, CheckOptions{oracle, max_tietze});
            print(result.report);
            return result.exit_code;
        }
        if (*links) {
            print(whitney_to_json(x, check_whitney(x)));
        } else if (*rotsys) {
            print(enumeration_to_json(x, enumerate_for(x, check_whitney(x).is_whitney, CheckOptions{oracle})));
        } else if (*surfaces) {
            print(surfaces_to_json(x, rotation_for(doc, oracle)));
        } else if (*homology) {
            print(homology_to_json(is_simply_connected(x, max_tietze)));
        } else if (*fat) {
            const auto f = fatten(x, rotation_for(doc, oracle));
            const auto sigma_fat = induced_fat_rotation(f);
            write_file(out_path, emit_cx2(f.carrier, sigma_fat));
            write_file(out_path + ".provenance.json", provenance_to_json(f).dump(2) + "\n");
            print({{"output", out_path},
                   {"provenance", out_path + ".provenance.json"},
                   {"counts",
                    {{"vertices", f.carrier.vertex_count()},
                     {"edges", f.carrier.edge_count()},
                     {"faces", f.carrier.face_count()}}}});
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
}
