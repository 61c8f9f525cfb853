#ifndef MAXVEM_MAXVEM_HPP
#define MAXVEM_MAXVEM_HPP

#include "maxvem/assembly.hpp"
#include "maxvem/bench.hpp"
#include "maxvem/config.hpp"
#include "maxvem/direct.hpp"
#include "maxvem/error.hpp"
#include "maxvem/geometry.hpp"
#include "maxvem/krylov.hpp"
#include "maxvem/mesh.hpp"
#include "maxvem/operator.hpp"
#include "maxvem/parallel.hpp"
#include "maxvem/pmesh_io.hpp"
#include "maxvem/preconditioner.hpp"
#include "maxvem/simulation.hpp"
#include "maxvem/sparse.hpp"
#include "maxvem/spectral.hpp"
#include "maxvem/types.hpp"
#include "maxvem/vem.hpp"
#include "maxvem/vtk.hpp"

#endif  // MAXVEM_MAXVEM_HPP
