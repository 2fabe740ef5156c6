#include "coh1/io.hpp"
#include "coh1/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"integral (co)homology of cohomogeneity one 7-manifolds from group-diagram data"};

    std::string input_file, sweep_family, atoms_file, format = "text";
    bool check = false, homology_only = false, cohomology_only = false, serial = false;
    std::vector<int> bounds;

    app.add_option("input", input_file, "diagram file (JSON, schema 1)");
    app.add_flag("--check", check, "cross-check formula values against the lattice oracle");
    app.add_option("--sweep", sweep_family, "enumerate and tabulate all valid diagrams of a family (N7A or N7E)");
    app.add_option("--bounds", bounds, "sweep box: slope [b [mn]]")->expected(1, 3);
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--homology", homology_only, "print homology only");
    app.add_flag("--cohomology", cohomology_only, "print cohomology only");
    app.add_flag("--serial", serial, "run sweeps on the serial reference path");
    app.add_option("--atoms", atoms_file, "extra atom data file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!sweep_family.empty()) {
            coh1::sweep::SweepBounds b;
            if (bounds.size() > 0) b.slope = bounds[0];
            if (bounds.size() > 1) b.b = bounds[1];
            if (bounds.size() > 2) b.mn = bounds[2];
            auto diagrams = coh1::sweep::enumerate_diagrams(sweep_family, b);
            auto records = serial ? coh1::sweep::run_serial(diagrams)
                                  : coh1::sweep::run_parallel(diagrams);
            std::cout << coh1::sweep::render_table(records);
            return coh1::sweep::count_disagreements(records) == 0 ? 0 : 1;
        }

        if (input_file.empty()) {
            std::cerr << "error: provide a diagram file or --sweep\n";
            return 2;
        }
        std::ifstream in(input_file);
        if (!in) {
            std::cerr << "error: cannot open " << input_file << "\n";
            return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        auto diagrams = coh1::io::parse_input(ss.str());

        auto cat = atoms_file.empty() ? coh1::catalog::Catalog::builtin()
                                      : coh1::catalog::Catalog::load(atoms_file);
        std::vector<coh1::io::DiagramResult> results;
        for (const auto& d : diagrams) results.push_back(coh1::io::evaluate(d, cat, check));

        bool show_h = !cohomology_only, show_c = !homology_only;
        auto fmt = format == "json" ? coh1::io::Format::json : coh1::io::Format::text;
        std::cout << coh1::io::render_results(results, fmt, show_h, show_c);
        return coh1::io::all_ok(results) ? 0 : 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
