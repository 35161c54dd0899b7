// Built-in objects: the morphism phi, the 19 Wang tiles U, the segments of P_U.
#pragma once

#include "morphism2d.hpp"

#include <array>
#include <string>
#include <vector>

namespace aperiodic::data {

// columns bottom-to-top
inline Morphism2d phi() {
    const std::vector<std::vector<std::vector<Letter>>> cols = {
        {{17}},
        {{16}},
        {{15}, {11}},
        {{13}, {9}},
        {{17}, {8}},
        {{16}, {8}},
        {{15}, {8}},
        {{14}, {8}},
        {{14, 6}},
        {{17, 3}},
        {{16, 3}},
        {{14, 2}},
        {{15, 7}, {11, 1}},
        {{14, 6}, {11, 1}},
        {{13, 7}, {9, 1}},
        {{12, 6}, {9, 1}},
        {{18, 5}, {10, 1}},
        {{13, 4}, {9, 1}},
        {{14, 2}, {8, 0}},
    };
    std::vector<Word2d> rule;
    for (auto& c : cols) rule.push_back(Word2d::from_columns(c));
    return {19, 19, std::move(rule)};
}

// right, top, left, bottom
inline std::vector<std::string> u_tile_strings() {
    return {"FOJO", "FOHL", "JMFP", "DMFK", "HPJP", "HPHN", "HKFP", "HKDP", "BOIO", "GLEO",
            "GLCL", "ALIO", "EPGP", "EPIP", "IPGK", "IPIK", "IKBM", "IKAK", "CNIP"};
}

// horizontal dominoes (left, right) in the language of phi
inline std::vector<std::array<Letter, 2>> h_dominoes() {
    return {{0, 3},   {1, 2},   {1, 3},   {1, 6},   {2, 0},   {2, 4},   {3, 7},   {4, 1},
            {5, 1},   {6, 1},   {6, 5},   {7, 1},   {8, 16},  {9, 14},  {10, 12}, {10, 14},
            {11, 17}, {12, 9},  {13, 9},  {14, 8},  {14, 11}, {14, 13}, {14, 18}, {15, 8},
            {15, 11}, {16, 8},  {16, 13}, {16, 15}, {17, 8},  {17, 13}, {18, 10}};
}

// vertical dominoes (bottom, top) in the language of phi
inline std::vector<std::array<Letter, 2>> v_dominoes() {
    return {{0, 8},   {1, 8},   {1, 9},   {1, 11},  {2, 16},  {3, 16},  {4, 13},  {5, 13},  {6, 14},
            {6, 17},  {7, 15},  {8, 0},   {8, 9},   {8, 11},  {9, 1},   {9, 10},  {10, 1},  {11, 1},
            {11, 10}, {12, 6},  {13, 4},  {13, 7},  {13, 18}, {14, 2},  {14, 6},  {14, 12}, {15, 7},
            {15, 13}, {15, 18}, {16, 3},  {16, 14}, {16, 17}, {17, 3},  {17, 14}, {18, 5}};
}

}  // namespace aperiodic::data
