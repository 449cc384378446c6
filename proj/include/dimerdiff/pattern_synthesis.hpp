//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file dimerdiff/pattern_synthesis.hpp
//! Gaussian line-shape model of the measured diffraction pattern.
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffraction_engine.hpp"

namespace dimerdiff
{
struct Peak
{
    int n = 0;
    TransitionChannel channel;
    double angle = 0;  //!< [deg]
    double area = 0;
    double width = 0;  //!< [deg]
};

//! w_n = w0 sqrt(1 + (dw n / w0)^2)
double peak_width(int n, double w0, double dw);

//! Label "l'->l" of a channel
std::string channel_label(TransitionChannel const& channel);

struct GridSpec
{
    double step = 1e-4;    //!< [deg]
    double margin = 0.05;  //!< [deg] beyond the outermost peaks
    std::optional<double> lower;
    std::optional<double> upper;
    bool components = false;
};

struct Pattern
{
    std::vector<double> angle;  //!< [deg]
    std::vector<double> total;
    std::vector<std::string> component_labels;
    std::vector<std::vector<double>> components;
    std::vector<std::string> warnings;
};

// Sum of I / (sqrt(pi) w_n) exp(-(theta - theta_n)^2 / w_n^2)
Pattern synthesize(std::vector<Peak> const& peaks, GridSpec const& grid = {});

//---------------------------------------------------------------------------//
struct ResolvabilityReport
{
    struct Overlap
    {
        std::size_t first;
        std::size_t second;
        double separation;  //!< [deg]
    };

    struct Status
    {
        bool overlapping = false;  //!< closer than w_a + w_b to another peak
        bool masked = false;       //!< other peaks outweigh it at its centre
        bool below_floor = false;  //!< area under the detection floor

        bool resolvable() const
        {
            return !overlapping && !masked && !below_floor;
        }
    };

    std::vector<Overlap> overlaps;
    std::vector<Status> status;
};

ResolvabilityReport resolvability(std::vector<Peak> const& peaks,
                                  double detection_floor = 0);

/*!
 * Peaks of every propagating sweep entry. De-excitation channels are kept
 * only if the initial population exceeds population_floor.
 */
std::vector<Peak> peaks_from_sweep(SweepResult const& sweep,
                                   BeamSpec const& beam,
                                   double population_floor = 1e-4);

}  // namespace dimerdiff
