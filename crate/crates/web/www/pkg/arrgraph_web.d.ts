/* tslint:disable */
/* eslint-disable */

/**
 * The sets `Delta_ij` of `A(n,k,k)` with the row and column partitions
 * checked against `Aut(A(n,k,k))`, plus the map `h` when `k = n`.
 */
export function delta_blocks(n: number, k: number): string;

/**
 * Vertices, labels and edges of `A(n,k,r)` (`family = "arrangement"`) or
 * `Cay(S_n, set)` (`family = "cayley"`).
 */
export function graph(family: string, n: number, k: number, r: number, set: string): string;

/**
 * Automorphism group order next to the order of the known candidate
 * subgroup (`P`, `Q` and `h` maps for arrangement graphs; right
 * multiplication, conjugation and inversion for Cayley graphs).
 */
export function symmetry(family: string, n: number, k: number, r: number, set: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly delta_blocks: (a: number, b: number) => [number, number];
    readonly graph: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number];
    readonly symmetry: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
