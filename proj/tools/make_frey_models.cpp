// Writes the two Frey families as model files: make-frey-models <output-dir>
#include "frey/freycurves.hpp"
#include "frey/models.hpp"

#include <filesystem>
#include <iostream>

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make-frey-models <output-dir>\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    try {
        std::filesystem::create_directories(dir);
        for (const auto& m : {frey::models::quadratic_family(), frey::models::cubic_family()}) {
            const auto path = dir / (m.name + ".model");
            frey::save_curve_model(m, path);
            if (!(frey::load_curve_model(path).a == m.a)) {
                std::cerr << "round trip failed for " << path << "\n";
                return 1;
            }
            std::cout << path.string() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
