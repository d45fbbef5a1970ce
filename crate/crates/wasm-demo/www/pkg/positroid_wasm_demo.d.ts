/* tslint:disable */
/* eslint-disable */

/**
 * Connected positroids of the given rank on `[n]` with their `h*`.
 */
export function atlas(rank: number, n: number): string;

export function randomSubdivision(n: number, seed: number): string;

/**
 * Chains, arcs, circular extensions and `h*` of a bicolored subdivision.
 */
export function tree(subdivision: string): string;

/**
 * Labels, dual graph, BFS covers, affine windows and all closed `h*` methods.
 */
export function triangulation(positroid: string, w0: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly atlas: (a: number, b: number) => [number, number, number, number];
    readonly randomSubdivision: (a: number, b: number) => [number, number, number, number];
    readonly tree: (a: number, b: number) => [number, number, number, number];
    readonly triangulation: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
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
