class S5 extends Abstract1 {
  public void enter() {
    send("msg17");
    send("msg18");
  }
  void exit() {
    new S29();
    new S27();
  }
  void handle() {
    new Helper();
    try {
      send("msg10");
      log("note");
      new S9();
      switch (event) {
        case EV56:
          switch (event) {
            case EV57:
              new S17();
              send("msg12");
              break;
          }
          switch (event) {
            case EV58:
              log("note");
              send("msg18");
              send("msg18");
              break;
          }
          send("msg18");
          new S12();
          break;
        case EV59:
          send("msg12");
          new S9();
          break;
        case EV60:
          switch (event) {
            case EV61:
              new State();
              new S12();
              break;
            case EV62:
              new S4();
              send("msg9");
              new S30();
              break;
          }
          new S10();
          break;
      }
    } catch (TimeoutException e) {
      send("msg19");
      if (x6 > 0) {
        if (x9 > 0) {
          log("note");
        } else {
          new S11();
        }
        try {
          new S4();
          new S24();
          new S1();
          new S3();
        } catch (IOException e) {
          log("note");
        } catch (IllegalStateException e) {
          send("msg12");
          log("note");
        }
        new Helper();
      } else {
        log("note");
        send("msg15");
      }
      new S14();
      send("msg8");
    } finally {
      send("msg1");
      new S11();
      new S23();
      new S8();
    }
    log("note");
    send("msg19");
  }
  void tick() {
    switch (event) {
      case EV63:
        log("note");
        log("note");
        break;
      case EV64:
        switch (event) {
          case EV65:
            try {
              new S6();
              new S21();
            } catch (IllegalStateException e) {
              send("msg19");
              send("msg0");
              send("msg12");
            }
            if (x5 > 0) {
              new S30();
              send("msg0");
            }
            new Helper();
            send("msg7");
            break;
          case EV66:
            new S22();
            if (x2 > 0) {
              new S28();
            } else {
              log("note");
            }
            switch (event) {
              case EV67:
                send("msg16");
                break;
            }
            new S4();
            break;
        }
        break;
    }
    new S3();
    new Helper();
    if (x9 > 0) {
      try {
        send("msg0");
        send("msg2");
        new S15();
        send("msg11");
      } catch (IOException e) {
        new S7();
        new S17();
        try {
          new S5();
          new S22();
        } catch (IllegalStateException e) {
          send("msg17");
        } catch (IllegalStateException e) {
          new S11();
          log("note");
          new S21();
        }
      } catch (IllegalStateException e) {
        send("msg10");
      }
      log("note");
      send("msg6");
    } else {
      new S14();
      if (x5 > 0) {
        switch (event) {
          case EV68:
            new S8();
            new S15();
            new S28();
            break;
          case EV69:
            new State();
            send("msg14");
            new S10();
            new S11();
            break;
        }
        if (x0 > 0) {
          send("msg6");
        } else {
          new S1();
          new S21();
          log("note");
        }
      } else {
        try {
          new S5();
          new S14();
          new S25();
        } catch (TimeoutException e) {
          new S5();
          send("msg17");
          new S14();
        } finally {
          send("msg15");
        }
      }
    }
  }
  void reset() {
    switch (event) {
      case EV70:
        try {
          new S9();
          new Helper();
          new State();
        } catch (IOException e) {
          new S2();
          send("msg18");
        } catch (IllegalStateException e) {
          switch (event) {
            case EV71:
              send("msg4");
              send("msg12");
              new S9();
              new S27();
              break;
          }
        }
        new S21();
        new S22();
        try {
          send("msg3");
          send("msg9");
          try {
            send("msg11");
          } catch (TimeoutException e) {
            new S29();
          } finally {
            new S16();
            log("note");
            new S14();
          }
        } catch (IOException e) {
          if (x4 > 0) {
            log("note");
            send("msg6");
          }
        }
        break;
      case EV72:
        if (x4 > 0) {
          if (x2 > 0) {
            new S10();
          } else {
            send("msg4");
            new S28();
          }
          if (x3 > 0) {
            log("note");
            new Helper();
          } else {
            new S4();
            new Helper();
            new S11();
          }
          send("msg2");
        } else {
          send("msg3");
          new S8();
          new Helper();
          new S20();
        }
        new S12();
        new S27();
        break;
      case EV73:
        if (x4 > 0) {
          send("msg7");
          log("note");
        }
        send("msg9");
        break;
    }
    send("msg1");
    switch (event) {
      case EV74:
        try {
          send("msg5");
          new S23();
        } catch (IOException e) {
          send("msg6");
          send("msg19");
          switch (event) {
            case EV75:
              log("note");
              new S9();
              new S2();
              break;
            case EV76:
              send("msg16");
              send("msg18");
              break;
          }
        }
        if (x3 > 0) {
          new S26();
          log("note");
          try {
            new S20();
            log("note");
            send("msg1");
          } catch (TimeoutException e) {
            new S15();
          } catch (IllegalStateException e) {
            new S22();
            new S6();
          }
        } else {
          send("msg10");
        }
        if (x0 > 0) {
          new S23();
          if (x6 > 0) {
            send("msg15");
          }
          log("note");
          send("msg19");
        } else {
          switch (event) {
            case EV77:
              new S24();
              break;
            case EV78:
              send("msg0");
              send("msg9");
              break;
          }
          new S13();
          send("msg11");
          send("msg15");
        }
        new S26();
        break;
      case EV79:
        switch (event) {
          case EV80:
            send("msg0");
            new S24();
            if (x9 > 0) {
              new S21();
            } else {
              log("note");
              log("note");
              new S6();
              log("note");
            }
            if (x2 > 0) {
              new S23();
              send("msg5");
            } else {
              new S11();
              new S26();
              new S30();
              send("msg11");
            }
            break;
        }
        break;
      case EV81:
        try {
          if (x4 > 0) {
            send("msg0");
            send("msg15");
            send("msg2");
            new S4();
          } else {
            log("note");
            send("msg5");
            new S3();
          }
        } catch (IllegalStateException e) {
          new S14();
          switch (event) {
            case EV82:
              new State();
              new S16();
              break;
            case EV83:
              send("msg17");
              break;
            case EV84:
              send("msg6");
              break;
          }
          new S25();
          switch (event) {
            case EV85:
              new S10();
              send("msg13");
              new S21();
              break;
            case EV86:
              new Helper();
              new S27();
              send("msg7");
              break;
          }
        }
        break;
    }
  }
}
