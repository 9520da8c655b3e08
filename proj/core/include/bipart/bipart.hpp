#ifndef BIPART_BIPART_HPP
#define BIPART_BIPART_HPP

#include "bipart/asymptotics.hpp"
#include "bipart/bigint.hpp"
#include "bipart/bipartite.hpp"
#include "bipart/classic_partitions.hpp"
#include "bipart/crank.hpp"
#include "bipart/format.hpp"
#include "bipart/series.hpp"

#endif  // BIPART_BIPART_HPP
