#pragma once

#include <cohinv/arith.hpp>
#include <cohinv/rootsys.hpp>
#include <cohinv/lattice.hpp>
#include <cohinv/qform.hpp>
#include <cohinv/repth.hpp>
#include <cohinv/invariants.hpp>
#include <cohinv/restrict.hpp>
#include <cohinv/serialize.hpp>
#include <cohinv/verify.hpp>
