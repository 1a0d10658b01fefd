_max_nthreads = None


def set_max_nthreads(nthreads):
    """ Set the maximum number of threads.

    Parameters
    ----------
    nthreads : int
        Maximum number of threads.
    """
    global _max_nthreads

    nthreads = int(nthreads)
    if nthreads < 1:
        raise ValueError("Cannot set number of threads smaller than one.")
    _max_nthreads = nthreads


def get_max_nthreads():
    """ Get the maximum number of threads

    Returns
    -------
    int
        Maximum number of threads.
    """
    from multiprocessing import cpu_count

    if _max_nthreads is None:
        return cpu_count()
    return _max_nthreads


def parallel_map(func, items, verbose=False, desc=None):
    """
    Apply ``func`` to every item with a joblib thread pool, keeping input order.
    """
    from joblib import Parallel, delayed
    from tqdm import tqdm

    items = list(items)
    if len(items) < 2:
        return [func(i) for i in items]
    n_jobs = min(get_max_nthreads(), len(items))
    jobs = (delayed(func)(i) for i in tqdm(items, desc=desc, disable=not verbose))
    return Parallel(n_jobs=n_jobs, backend="threading")(jobs)
