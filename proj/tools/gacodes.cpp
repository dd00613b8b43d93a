// gacodes: command-line driver over the header library.

#include <gacodes/cli.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    gacodes::RunSpec spec;
    CLI::App app{"Idempotents, minimal codes and golden tables for semisimple group algebras"};
    gacodes::configure_app(app, spec);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        auto res = gacodes::run(spec);
        auto text = gacodes::render(res.report, gacodes::parse_format(spec.format));
        if (spec.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(spec.out, std::ios::binary);
            if (!out) throw gacodes::PreconditionError("cannot write " + spec.out);
            out << text;
        }
        return res.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "gacodes: " << e.what() << "\n";
        return gacodes::exit_code_for(e);
    }
}
