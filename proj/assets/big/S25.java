class S25 extends Abstract20 {
  void enter() {
    new S40();
  }
  void exit() {
    send("msg10");
  }
  void handle() {
    switch (event) {
      case EV727:
        new S36();
        try {
          send("msg14");
          switch (event) {
            case EV728:
              new S3();
              send("msg7");
              new S87();
              new Helper();
              break;
          }
        } finally {
          send("msg19");
          if (x6 > 0) {
            new S9();
          }
          send("msg18");
        }
        new S88();
        break;
      case EV729:
        send("msg17");
        send("msg0");
        send("msg7");
        break;
    }
  }
  void tick() {
    new S16();
    log("note");
  }
  void reset() {
    new S24();
    try {
      log("note");
      send("msg15");
    } catch (TimeoutException e) {
      try {
        new S21();
      } catch (TimeoutException e) {
        switch (event) {
          case EV730:
            send("msg6");
            send("msg4");
            new S20();
            log("note");
            break;
          case EV731:
            new S50();
            break;
          case EV732:
            send("msg16");
            send("msg18");
            break;
        }
      }
      send("msg8");
      send("msg10");
      new S85();
    } catch (IllegalStateException e) {
      if (x9 > 0) {
        send("msg4");
        try {
          new S71();
          log("note");
          send("msg12");
        } catch (IllegalStateException e) {
          new S1();
          new S18();
        } catch (TimeoutException e) {
          send("msg4");
          send("msg17");
          send("msg12");
        }
      } else {
        switch (event) {
          case EV733:
            new State();
            new S53();
            send("msg7");
            send("msg13");
            break;
          case EV734:
            new S34();
            break;
        }
      }
      new S41();
      new S58();
      switch (event) {
        case EV735:
          if (x6 > 0) {
            new S93();
            new S54();
            log("note");
            send("msg16");
          } else {
            send("msg10");
          }
          new S89();
          new S51();
          break;
        case EV736:
          try {
            send("msg2");
          } finally {
            new S92();
            new S65();
            send("msg19");
          }
          new S51();
          send("msg8");
          break;
      }
    }
  }
  void open() {
    send("msg8");
    new State();
  }
  void close() {
    new S58();
    try {
      new S92();
      if (x7 > 0) {
        new S82();
      } else {
        new S25();
        log("note");
      }
      try {
        new S46();
        try {
          send("msg18");
          send("msg18");
        } finally {
          new S29();
          new S79();
          send("msg2");
          new S29();
        }
        send("msg9");
      } catch (IllegalStateException e) {
        new S8();
      } catch (IllegalStateException e) {
        new S83();
      }
      send("msg12");
    } catch (IllegalStateException e) {
      try {
        switch (event) {
          case EV737:
            new S32();
            new S43();
            break;
          case EV738:
            new S41();
            new S98();
            new S12();
            break;
          case EV739:
            log("note");
            new State();
            break;
        }
        try {
          send("msg4");
          send("msg16");
        } catch (IllegalStateException e) {
          new State();
          new S6();
          send("msg8");
          new S3();
        }
        log("note");
        switch (event) {
          case EV740:
            log("note");
            new S10();
            new Helper();
            break;
        }
      } catch (IllegalStateException e) {
        if (x9 > 0) {
          send("msg10");
          new S87();
        } else {
          new S66();
          new S36();
          send("msg2");
          new Helper();
        }
        send("msg14");
      } finally {
        if (x6 > 0) {
          send("msg5");
        } else {
          new S41();
          new S19();
        }
        if (x0 > 0) {
          new S52();
        } else {
          new S68();
          new S38();
          new S41();
          new S19();
        }
      }
      new S55();
      new State();
    }
  }
  public void start() {
    try {
      try {
        try {
          new Helper();
          new State();
          new S15();
        } catch (IOException e) {
          send("msg19");
          new S46();
          log("note");
          new S9();
        }
        try {
          send("msg1");
          send("msg18");
          new S20();
        } catch (IllegalStateException e) {
          log("note");
          new S23();
          new S55();
          new S51();
        } catch (IOException e) {
          new S83();
          new S72();
        }
      } catch (IOException e) {
        new S36();
        send("msg18");
        send("msg9");
        new S65();
      }
      if (x0 > 0) {
        try {
          send("msg8");
          send("msg13");
        } catch (TimeoutException e) {
          new S8();
          send("msg16");
        }
        log("note");
        try {
          new S86();
          log("note");
          send("msg4");
        } catch (TimeoutException e) {
          send("msg18");
        }
      } else {
        if (x2 > 0) {
          log("note");
          log("note");
          send("msg1");
        } else {
          new S90();
          new S98();
          send("msg14");
        }
      }
    } catch (TimeoutException e) {
      send("msg17");
      if (x9 > 0) {
        new S41();
        send("msg1");
        if (x0 > 0) {
          new State();
          new S38();
        }
      } else {
        new S52();
      }
      switch (event) {
        case EV741:
          new S68();
          new S39();
          new S8();
          new S96();
          break;
        case EV742:
          send("msg13");
          break;
        case EV743:
          new S29();
          break;
      }
    } finally {
      new S80();
      send("msg10");
      send("msg17");
      log("note");
    }
    send("msg11");
  }
  void stop() {
    switch (event) {
      case EV744:
        if (x6 > 0) {
          if (x9 > 0) {
            new S41();
            new Helper();
          } else {
            log("note");
            new S75();
            send("msg14");
          }
        }
        break;
    }
    send("msg2");
    new S99();
  }
  void pause() {
    if (x3 > 0) {
      if (x4 > 0) {
        try {
          new S13();
          new Helper();
          new S61();
        } catch (IOException e) {
          new S48();
          send("msg17");
        }
        switch (event) {
          case EV745:
            new S85();
            break;
        }
      }
      new S30();
      send("msg7");
      log("note");
    } else {
      new S9();
      switch (event) {
        case EV746:
          try {
            new S1();
            new S25();
            new Helper();
            log("note");
          } catch (IOException e) {
            send("msg5");
            new S89();
            send("msg14");
          } catch (IOException e) {
            new S44();
            send("msg15");
            new S28();
          }
          new S11();
          send("msg0");
          break;
      }
      if (x2 > 0) {
        new S45();
        if (x1 > 0) {
          new S53();
        }
      }
      new S60();
    }
    new S68();
  }
}
